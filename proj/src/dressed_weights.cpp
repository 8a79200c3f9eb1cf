// dressed_weights.cpp: Weight tables and inner-product assembly of the moment coefficients

#include "tlsflow/dressed_weights.hpp"

#include <stdexcept>

namespace tlsflow::weights {

namespace {

constexpr int kNeg = -1;  // G(−ω), emission
constexpr int kPos = +1;  // G(+ω), absorption

Vector4d uniform(double v) { return Vector4d::Constant(v); }

cplx dot(const Vector4d& g, const Vector4d& w) { return {g.dot(w), 0.0}; }

}  // namespace

double half_sided_fourier(const bath::ReservoirSpec& spec, double omega, int sign, HalfSide /*side*/) {
    return 0.5 * bath::correlation_fourier(spec, omega, sign);
}

GVectorSet build_gvectors(const sys::DressedFrame& frame, const bath::ReservoirSpec& bath) {
    const double lo = frame.lower_frequency();
    const double hi = frame.upper_frequency();
    if (!(lo > 0.0)) throw DressedFrameError("weights: negative dressed frequency");

    auto full = [&](double w, int s) { return bath::correlation_fourier(bath, w, s); };
    auto gm = [&](double w, int s) { return half_sided_fourier(bath, w, s, HalfSide::minus); };
    auto gp = [&](double w, int s) { return half_sided_fourier(bath, w, s, HalfSide::plus); };

    GVectorSet g;
    g.gl << full(hi, kNeg), full(hi, kPos), full(lo, kNeg), full(lo, kPos);
    g.gl *= 0.5;
    g.ps << gm(lo, kNeg) + gp(hi, kNeg), gm(hi, kPos) + gp(lo, kPos), gm(lo, kPos) + gp(hi, kPos),
        gm(hi, kNeg) + gp(lo, kNeg);
    g.ps *= 0.5;
    g.gl_fs << gm(hi, kNeg) - gp(hi, kNeg), gm(hi, kPos) - gp(hi, kPos), gm(lo, kNeg) - gp(lo, kNeg),
        gm(lo, kPos) - gp(lo, kPos);
    g.gl_fs *= 0.5;
    g.ps_fs << gm(lo, kNeg) - gp(hi, kNeg), gm(hi, kPos) - gp(lo, kPos), gm(lo, kPos) - gp(hi, kPos),
        gm(hi, kNeg) - gp(lo, kNeg);
    g.ps_fs *= 0.5;
    return g;
}

WeightTables build_weight_tables(const sys::DressedFrame& frame) {
    const double r = frame.mixing_norm;
    const double u = frame.mix_plus();   // y + 2r
    const double w = frame.mix_minus();  // y − 2r
    const double v = -w;                 // −y + 2r
    const double r2 = r * r;
    const double k8 = 8.0 * r2;
    auto sq = [r](double z) { const double t = z / (4.0 * r); return t * t; };
    const double ps_diag = -4.0 / k8;  // y² − 4r² = −4
    const double inv2r2 = 1.0 / (2.0 * r2);

    WeightTables t;

    auto& a = t.occ1_occ1;
    a.gl[0] << -2.0 * sq(u), -2.0 * sq(u), -2.0 * sq(w), -2.0 * sq(w);
    a.ps[0] = uniform(ps_diag);
    a.gl[1] = uniform(-inv2r2);
    a.ps[1] = uniform(inv2r2);

    auto& f = t.occ2_occ2;
    f.gl[0] = a.gl[1];
    f.ps[0] = a.ps[1];
    f.gl[1] << -2.0 * sq(v), -2.0 * sq(v), -2.0 * sq(u), -2.0 * sq(u);
    f.ps[1] = uniform(ps_diag);

    auto& b = t.occ1_coh;
    b.gl[0] << -u / k8, -u / k8, -w / k8, -w / k8;
    b.ps[0] << w / k8, w / k8, u / k8, u / k8;
    b.gl[1] << w / k8, w / k8, u / k8, u / k8;
    b.ps[1] << v / k8, v / k8, -u / k8, -u / k8;
    b.gl_fs[0] << u / k8, -u / k8, w / k8, -w / k8;
    b.ps_fs[0] << -w / k8, w / k8, u / k8, -u / k8;
    b.gl_fs[1] << v / k8, -v / k8, -u / k8, u / k8;
    b.ps_fs[1] << w / k8, -w / k8, -u / k8, u / k8;

    auto& b2 = t.occ2_coh;
    for (int j = 0; j < 2; ++j) {
        b2.gl[j] = b.gl[j];
        b2.ps[j] = b.ps[j];
        b2.gl_fs[j] = -b.gl_fs[j];
        b2.ps_fs[j] = -b.ps_fs[j];
    }

    auto& d = t.coh_coh;
    const double q4 = 1.0 / (4.0 * r2);
    const double m = -4.0 / (16.0 * r2);
    d.gl_fs[0] << -sq(u) + q4, sq(u) - q4, -sq(w) + q4, sq(w) - q4;
    d.ps_fs[0] << m - q4, -m + q4, -m + q4, m - q4;
    d.gl_fs[1] << sq(v) - q4, -sq(v) + q4, sq(u) - q4, -sq(u) + q4;
    d.ps_fs[1] << -m + q4, m - q4, m - q4, -m + q4;

    auto& s1 = t.source_occ1;
    s1.gl[0] << 0.0, 2.0 * sq(u), 0.0, 2.0 * sq(w);
    s1.ps[0] << 0.0, -ps_diag, -ps_diag, 0.0;
    s1.gl[1] << 0.0, inv2r2, 0.0, inv2r2;
    s1.ps[1] << 0.0, -inv2r2, -inv2r2, 0.0;

    auto& s2 = t.source_occ2;
    s2.gl[0] << 0.0, inv2r2, 0.0, inv2r2;
    s2.ps[0] << 0.0, -inv2r2, -inv2r2, 0.0;
    s2.gl[1] << 0.0, 2.0 * sq(v), 0.0, 2.0 * sq(u);
    s2.ps[1] << 0.0, -ps_diag, -ps_diag, 0.0;

    auto& sc = t.source_coh;
    const double k4 = 4.0 * r2;
    sc.gl[0] << 0.0, u / k4, 0.0, w / k4;
    sc.ps[0] << 0.0, -u / k4, -w / k4, 0.0;
    sc.gl[1] << 0.0, v / k4, 0.0, -u / k4;
    sc.ps[1] << 0.0, u / k4, w / k4, 0.0;

    return t;
}

Coefficients assemble_coefficients(const sys::DressedFrame& frame, const bath::ReservoirSpec& bath1,
                                   const bath::ReservoirSpec& bath2, Approach mode) {
    if (mode == Approach::local) {
        throw std::invalid_argument("weights: coefficients exist only for the global and PS approaches");
    }
    const WeightTables w = build_weight_tables(frame);
    const bool keep_ps = mode == Approach::partial_secular;

    Coefficients out;
    out.mode = mode;
    const std::array<const bath::ReservoirSpec*, 2> baths{&bath1, &bath2};
    for (int j = 0; j < 2; ++j) {
        const GVectorSet g = build_gvectors(frame, *baths[j]);
        ReservoirCoefficients& c = out.reservoir[j];
        c.a_gl = dot(g.gl, w.occ1_occ1.gl[j]);
        c.f_gl = dot(g.gl, w.occ2_occ2.gl[j]);
        c.b_gl = dot(g.gl, w.occ1_coh.gl[j]);
        c.s11_gl = dot(g.gl, w.source_occ1.gl[j]);
        c.s22_gl = dot(g.gl, w.source_occ2.gl[j]);
        c.s12_gl = dot(g.gl, w.source_coh.gl[j]);
        // Frequency shifts are neglected in both approaches: C_GL = D_GL = 0.
        c.c_gl = 0.0;
        c.d_gl = 0.0;
        if (keep_ps) {
            c.a_ps = dot(g.ps, w.occ1_occ1.ps[j]);
            c.f_ps = dot(g.ps, w.occ2_occ2.ps[j]);
            c.b_ps = dot(g.ps, w.occ1_coh.ps[j]);
            c.c_ps = dot(g.ps_fs, w.occ1_coh.ps_fs[j]);
            c.d_ps = dot(g.ps_fs, w.coh_coh.ps_fs[j]);
            c.s11_ps = dot(g.ps, w.source_occ1.ps[j]);
            c.s22_ps = dot(g.ps, w.source_occ2.ps[j]);
            c.s12_ps = dot(g.ps, w.source_coh.ps[j]);
        }
    }
    return out;
}

}  // namespace tlsflow::weights
