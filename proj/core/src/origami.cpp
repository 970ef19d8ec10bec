#include <trisect/origami.hpp>

#include <cmath>
#include <numbers>

namespace trisect {

namespace {

const Ray kBaseRay{{0.0, 0.0}, Angle{}};

}  // namespace

AbeConstruction abe_construct(Angle three_theta) {
    const double t3 = three_theta.rad();
    if (!(t3 > 0.0 && t3 < std::numbers::pi / 2.0)) {
        throw Error(ErrorCode::AngleOutOfRange, "origami construction needs an angle in (0, 90) degrees");
    }

    AbeConstruction c;
    c.three_theta = three_theta;
    c.theta = Angle::radians(t3 / 3.0);

    const double th = c.theta.rad();
    const double s = std::sin(th);
    c.O = {0.0, 0.0};
    c.S = {0.0, s};
    c.D = {0.0, 2.0 * s};
    c.H = {std::cos(th), s};
    c.C = {std::cos(t3), std::sin(t3)};
    c.G = midpoint(c.H, c.C);
    c.P = foot_of_perpendicular(c.H, kBaseRay);

    const Angle angle_h = polar_angle(c.H);
    const Angle angle_g = polar_angle(c.G);
    const Angle angle_c = polar_angle(c.C);
    c.alpha = angle_h;
    c.beta = angle_g - angle_h;
    c.gamma = angle_c - angle_g;
    c.unit_length = distance(c.O, c.H);
    return c;
}

Report abe_verify(const AbeConstruction& c) {
    const double tol = kOrigamiTolerance;
    const double th = c.theta.rad();
    const double sin_t = std::sin(th);
    const double cos_t = std::cos(th);

    const double oh = distance(c.O, c.H);
    const double oc = distance(c.O, c.C);
    const double hc = distance(c.H, c.C);
    const double od = distance(c.O, c.D);
    const double os = distance(c.O, c.S);
    const double sd = distance(c.S, c.D);
    const double hg = distance(c.H, c.G);
    const double gc = distance(c.G, c.C);

    const Angle angle_h = polar_angle(c.H - c.O);
    const Angle angle_g = polar_angle(c.G - c.O);
    const Angle angle_c = polar_angle(c.C - c.O);
    const double alpha = signed_difference(Angle{}, angle_h);
    const double beta = signed_difference(angle_h, angle_g);
    const double gamma = signed_difference(angle_g, angle_c);

    Report r;
    r.add("oh_minus_oc", std::abs(oh - oc), tol);
    r.add("oh_minus_unit", std::abs(oh - c.unit_length), tol);
    r.add("hc_minus_od", std::abs(hc - od), tol);
    r.add("os_minus_sd", std::abs(os - sd), tol);
    r.add("sd_minus_hg", std::abs(sd - hg), tol);
    r.add("hg_minus_gc", std::abs(hg - gc), tol);
    r.add("alpha_minus_beta", std::abs(alpha - beta), tol);
    r.add("beta_minus_gamma", std::abs(beta - gamma), tol);
    r.add("angle_sum_minus_given", std::abs(alpha + beta + gamma - c.three_theta.rad()), tol);
    r.add("op_minus_cos_theta", std::abs(distance(c.O, c.P) - cos_t), tol);
    r.add("hp_minus_sin_theta", std::abs(distance(c.H, c.P) - sin_t), tol);
    r.add("h_off_first_crease", std::abs(c.H.y - c.S.y), tol);
    r.add("c_off_given_ray", std::abs(line_offset(c.C, Ray{c.O, c.three_theta})), tol);
    r.add_informational("cp_minus_sin_theta", std::abs(distance(c.C, c.P) - sin_t));
    return r;
}

}  // namespace trisect
