/**
 * @file reference_data.cpp
 * @brief Verbatim transcription of the published benchmark tables. Values
 *        are kept exactly as printed, including rows the audit later flags
 *        as inconsistent with recomputation.
 */

#include "holomap/reference_data.hpp"

namespace holomap::refdata {

namespace {

Complex im(double v) { return Complex(0, v); }

}  // namespace

const std::vector<StabilityRow>& stability_rows() {
    // Concrete parameter instances: beta = 1 except in the beta = 0 rows,
    // matching the published case labels.
    static const std::vector<StabilityRow> rows = [] {
        const Complex one(1), i(0, 1);
        std::vector<StabilityRow> r;
        // --- first map ---
        r.push_back({"e1", "alpha=beta", {MapKind::E1, one, one},
                     {Complex(0.5), Complex(0.5)}, ModulusClaim::AllGreater1, ">1", "sinks"});
        r.push_back({"e1", "alpha=i*beta", {MapKind::E1, i, one},
                     {i / (one + i), one / (one + i)}, ModulusClaim::AllLess1, "<1", "l.a.s"});
        r.push_back({"e1", "alpha=-i*beta", {MapKind::E1, -i, one},
                     {-i / (one - i), one / (one - i)}, ModulusClaim::AllGreater1, ">1",
                     "sinks"});
        r.push_back({"e1", "alpha=0", {MapKind::E1, Complex(0), one},
                     {Complex(0), Complex(1)}, ModulusClaim::AllEqual1, "=1", "non-hyp"});
        r.push_back({"e1", "beta=0", {MapKind::E1, one, Complex(0)},
                     {Complex(1), Complex(0)}, ModulusClaim::ZeroAndOne, "=0,1", "non-hyp"});
        // --- second map ---
        r.push_back({"e8", "alpha=beta", {MapKind::E8, one, one},
                     {Complex(-0.5), Complex(0.5)}, ModulusClaim::AllLess1, "<1", "l.a.s"});
        r.push_back({"e8", "alpha=i*beta", {MapKind::E8, i, one},
                     {-one / (one + i), one / (one + i)}, ModulusClaim::AllGreater1, ">1",
                     "sinks"});
        r.push_back({"e8", "alpha=-i*beta", {MapKind::E8, -i, one},
                     {-one / (one - i), one / (one - i)}, ModulusClaim::AllGreater1, ">1",
                     "sinks"});
        r.push_back({"e8", "alpha=0", {MapKind::E8, Complex(0), one},
                     {Complex(-1), Complex(1)}, ModulusClaim::AllEqual1, "=1", "non-hyp"});
        r.push_back({"e8", "beta=0", {MapKind::E8, one, Complex(0)},
                     {Complex(0), Complex(0)}, ModulusClaim::AllZero, "=0", "repeller"});
        // --- third map ---
        r.push_back({"e9", "alpha=beta", {MapKind::E9, one, one},
                     {Complex(0.5), Complex(-0.5)}, ModulusClaim::OneAndHalf, "=1,1/2",
                     "non-hyp"});
        r.push_back({"e9", "alpha=i*beta", {MapKind::E9, i, one},
                     {i / (one + i), -i / (one + i)}, ModulusClaim::AllLess1, "<1", "l.a.s"});
        r.push_back({"e9", "alpha=-i*beta", {MapKind::E9, -i, one},
                     {-i / (one - i), i / (one - i)}, ModulusClaim::AllZero, "=0",
                     "repeller"});
        r.push_back({"e9", "alpha=0", {MapKind::E9, Complex(0), one},
                     {Complex(0), Complex(0)}, ModulusClaim::AllZero, "=0", "repeller"});
        r.push_back({"e9", "beta=0", {MapKind::E9, one, Complex(0)},
                     {Complex(1), Complex(-1)}, ModulusClaim::AllGreater1, ">1", "sinks"});
        return r;
    }();
    return rows;
}

const std::vector<CycleRow>& cycle_rows() {
    static const std::vector<CycleRow> rows = {
        // first map, alpha = beta = 1, purely imaginary cycles
        {MapKind::E1, 4, {im(0.765367), im(-1.84776), im(-0.765367), im(1.84776)}},
        {MapKind::E1, 5,
         {im(0.309721), im(-1.83083), im(-2.68251), im(0.918986), im(-0.71537)}},
        {MapKind::E1, 6,
         {im(0.53713), im(-0.735107), im(-0.501402), im(3.35475), im(1.69632),
          im(-0.887595)}},
        {MapKind::E1, 7,
         {im(0.563218), im(-1.45984), im(-1.09051), im(1.60201), im(0.292791),
          im(-4.03963), im(-3.16786)}},
        // second map
        {MapKind::E8, 3, {Complex(1.24698), Complex(-1.80194), Complex(-0.445042)}},
        {MapKind::E8, 5,
         {Complex(0.83083), Complex(-1.91899), Complex(-1.30972), Complex(1.68251),
          Complex(-0.28463)}},
        {MapKind::E8, 6,
         {Complex(1.80194), Complex(-0.445042), Complex(1.24698), Complex(-1.80194),
          Complex(-0.445042), Complex(1.24698)}},
        {MapKind::E8, 7,
         {Complex(1.87278), Complex(-0.556474), Complex(0.702862), Complex(-0.263063),
          Complex(0.625725), Complex(-1.37861), Complex(-1.20322)}},
        // third map
        {MapKind::E9, 3, {Complex(1.24698), Complex(-0.445042), Complex(-1.80194)}},
        {MapKind::E9, 4,
         {Complex(1.53339, -0.608009), Complex(1.81536, 0.929423),
          Complex(1.53339, -0.608009), Complex(1.81536, 0.929423)}},
        {MapKind::E9, 5,
         {Complex(0.574313, 0.798528), Complex(-0.273032, -0.160806),
          Complex(-1.84063, -1.25163), Complex(1.14206, -0.00923437),
          Complex(-0.60271, -1.1089)}},
        {MapKind::E9, 6,
         {Complex(2.61506), Complex(1.61917), Complex(2.61506), Complex(1.61917),
          Complex(2.61506), Complex(1.61917)}},
        {MapKind::E9, 7,
         {Complex(0.962688, 0.453798), Complex(-0.251383, -0.177869),
          Complex(-2.40312, 0.602711), Complex(1.08095, 0.0943187),
          Complex(-1.15807, 0.745878), Complex(0.377343, -0.482479),
          Complex(-1.12397, -0.739107)}},
        {MapKind::E9, 8,
         {Complex(27.0466), Complex(1.03839), Complex(27.0466), Complex(1.03839),
          Complex(27.0466), Complex(1.03839), Complex(27.0466), Complex(1.03839)}},
    };
    return rows;
}

const LongCycleCase& long_cycle_case() {
    static const LongCycleCase c = [] {
        LongCycleCase lc;
        lc.spec = {MapKind::E1, Complex(15, -88), Complex(-53, -30)};
        lc.initial = {Complex(65, -97), Complex(-92, -67)};
        lc.published_period = 23;
        const std::vector<Complex> half = {
            {18.574, -4.5796},  {3.295, -1.1914},   {-9.4511, -17.474},
            {15.164, -23.792},  {3.424, 0.61574},   {-13.604, -7.0189},
            {3.742, -25.505},   {2.618, 3.3548},    {-9.7582, 5.5619},
            {-11.358, -10.844}, {-1.2796, 5.1965},  {0.10378, 15.669},
        };
        lc.printed_points = half;
        for (const Complex& z : half) lc.printed_points.push_back(-z);
        return lc;
    }();
    return c;
}

const std::array<VerdictRow, 4>& verdict_rows() {
    static const std::array<VerdictRow, 4> rows = {{
        {{30, 47},
         {30, -10},
         {9, -41},
         {49, -63},
         {{{"Chaotic", Verdict::Chaotic, std::nullopt, std::nullopt},
           {"Convergent to (60,37)", Verdict::Convergent, Complex(60, 37), std::nullopt},
           {"Convergent to (60,37)", Verdict::Convergent, Complex(60, 37), std::nullopt}}}},
        {{56, -22},
         {-52, -19},
         {-81, -74},
         {89, 92},
         {{{"Periodic point (10.393,-0.14432) of period 2", Verdict::PeriodicConvergent,
            Complex(10.393, -0.14432), 2},
           {"Chaotic", Verdict::Chaotic, std::nullopt, std::nullopt},
           {"Periodic point (33.8,60.46) of period 2", Verdict::PeriodicConvergent,
            Complex(33.8, 60.46), 2}}}},
        {{4, -81},
         {64, 64},
         {45, -70},
         {32, 4},
         {{{"Periodic point (6.9614,-10.414) of period 2", Verdict::PeriodicConvergent,
            Complex(6.9614, -10.414), 2},
           {"Divergent", Verdict::Unbounded, std::nullopt, std::nullopt},
           {"Chaotic", Verdict::Chaotic, std::nullopt, std::nullopt}}}},
        {{15, -88},
         {-53, -30},
         {65, -97},
         {-92, -67},
         {{{"Periodic of period 23", Verdict::PeriodicConvergent, std::nullopt, 23},
           {"Convergent to (-38,-118)", Verdict::Convergent, Complex(-38, -118),
            std::nullopt},
           {"Convergent to (-38,-118)", Verdict::Convergent, Complex(-38, -118),
            std::nullopt}}}},
    }};
    return rows;
}

const std::array<StateSpaceRow, 8>& state_space_rows() {
    static const std::array<StateSpaceRow, 8> rows = {{
        {{9, -73}, {-70, -49}, {52, 110}, {68, 88},
         {"Convergent to (10.591,-5.759)", "Unbounded", "Convergent to (79,-122)"}},
        {{100, -55}, {31, 21}, {-82, 160}, {-11, -94},
         {"Unbounded", "Convergent to (131,-34)", "Convergent to (131,-34)"}},
        {{-29, 33}, {-44, -54}, {152, 122}, {87, -191},
         {"Fractal", "Unbounded", "Convergent to (-73,-33)"}},
        {{58, 56}, {34, -74}, {-8, -59}, {-57, -91},
         {"Unbounded", "Unbounded", "Periodic point (56.376,-118.56)"}},
        {{98, 1}, {-46, -80}, {-99, 130}, {55, 75},
         {"Fractal", "Periodic point (117.82,14.575) of period 6",
          "Periodic point (-61.076,-143.49) of period 2"}},
        {{-64, 0}, {4, 99}, {-89, 184}, {29, -32},
         {"Unbounded", "Unbounded", "Convergent to (-60,99)"}},
        {{80, -87}, {-33, -100}, {87, 64}, {42, 49},
         {"Fractal", "Chaotic", "Convergent to (47,-187)"}},
        {{4, 55}, {-76, 25}, {-34, -32}, {64, 6},
         {"Unbounded", "Unbounded", "Periodic point (19.794,105.86) of period 2"}},
    }};
    return rows;
}

const std::array<double, 3>& published_lyapunov() {
    static const std::array<double, 3> v = {1.6015, 1.2414, 0.6885};
    return v;
}

}  // namespace holomap::refdata
