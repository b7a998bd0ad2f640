#include "krrf/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "krrf/errors.hpp"

namespace krrf {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

// Speed floor used inside the bike's lateral/yaw updates.
constexpr double kBikeSpeedFloor = 0.05;
constexpr double kDegenerateEps = 1e-9;

struct PlanarState {
    double x, y, theta;
};

// Classic RK4 step for the planar ODE models; Deriv: PlanarState -> PlanarState.
template <typename Deriv>
PlanarState rk4_step(const PlanarState& s, double h, Deriv deriv) {
    const PlanarState k1 = deriv(s);
    const PlanarState s2{s.x + 0.5 * h * k1.x, s.y + 0.5 * h * k1.y, s.theta + 0.5 * h * k1.theta};
    const PlanarState k2 = deriv(s2);
    const PlanarState s3{s.x + 0.5 * h * k2.x, s.y + 0.5 * h * k2.y, s.theta + 0.5 * h * k2.theta};
    const PlanarState k3 = deriv(s3);
    const PlanarState s4{s.x + h * k3.x, s.y + h * k3.y, s.theta + h * k3.theta};
    const PlanarState k4 = deriv(s4);
    return {s.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
            s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
            s.theta + h / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta)};
}

template <typename Deriv>
void integrate_planar(std::vector<Config>& out, const Config& q, double t, double dt,
                      Deriv deriv) {
    if (!(t > 0.0)) throw std::invalid_argument("integration time must be positive");
    const int steps = rollout_steps(t, dt);
    out.clear();
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.push_back(q);
    PlanarState s{q.x, q.y, q.theta};
    for (int i = 0; i < steps; ++i) {
        s = rk4_step(s, dt, deriv);
        s.theta = normalize_angle(s.theta);
        Config c;
        c.x = s.x;
        c.y = s.y;
        c.theta = s.theta;
        out.push_back(c);
    }
}

} // namespace

Control CarModel::sample_control(Rng& rng) const {
    Control u;
    u.values[0] = rng.uniform(0.0, 50.0);
    u.values[1] = rng.uniform(-kQuarterPi, kQuarterPi);
    return u;
}

std::array<std::pair<double, double>, 2> CarModel::control_bounds() const {
    return {{{0.0, 50.0}, {-kQuarterPi, kQuarterPi}}};
}

void CarModel::integrate_into(std::vector<Config>& out, const Config& q, const Control& u,
                              double t) const {
    const double speed = u.values[0];
    const double turn_rate = speed / params_.axle_length * std::tan(u.values[1]);
    integrate_planar(out, q, t, dt_, [&](const PlanarState& s) {
        return PlanarState{speed * std::cos(s.theta), speed * std::sin(s.theta), turn_rate};
    });
}

Control DubinsModel::sample_control(Rng& rng) const {
    Control u;
    u.values[0] = speed_;
    u.values[1] = rng.uniform(-kQuarterPi, kQuarterPi);
    return u;
}

std::array<std::pair<double, double>, 2> DubinsModel::control_bounds() const {
    return {{{speed_, speed_}, {-kQuarterPi, kQuarterPi}}};
}

Control DiffDriveModel::sample_control(Rng& rng) const {
    Control u;
    u.values[0] = rng.uniform(0.0, 2.0);
    u.values[1] = rng.uniform(0.0, 2.0);
    return u;
}

std::array<std::pair<double, double>, 2> DiffDriveModel::control_bounds() const {
    return {{{0.0, 2.0}, {0.0, 2.0}}};
}

void DiffDriveModel::integrate_into(std::vector<Config>& out, const Config& q, const Control& u,
                                    double t) const {
    const double speed = 0.5 * params_.wheel_radius * (u.values[0] + u.values[1]);
    const double turn_rate = params_.wheel_radius / params_.wheel_base * (u.values[1] - u.values[0]);
    integrate_planar(out, q, t, dt_, [&](const PlanarState& s) {
        return PlanarState{speed * std::cos(s.theta), speed * std::sin(s.theta), turn_rate};
    });
}

BikeModel::BikeModel(BikeParams params) : params_(params) {
    if (params_.ts <= 0.0) throw std::invalid_argument("bike step must be positive");
    if (params_.mass <= 0.0 || params_.lf <= 0.0 || params_.lr <= 0.0 || params_.inertia <= 0.0)
        throw std::invalid_argument("bike mass/geometry/inertia must be positive");
    if (params_.kf == 0.0 || params_.kr == 0.0)
        throw std::invalid_argument("bike cornering stiffness must be set");
}

Control BikeModel::sample_control(Rng& rng) const {
    Control u;
    u.values[0] = rng.uniform(-5.0, 2.0);
    u.values[1] = rng.uniform(-kQuarterPi, kQuarterPi);
    return u;
}

std::array<std::pair<double, double>, 2> BikeModel::control_bounds() const {
    return {{{-5.0, 2.0}, {-kQuarterPi, kQuarterPi}}};
}

Config BikeModel::step(const Config& q, const Control& ctl) const {
    const double ts = params_.ts;
    const double accel = ctl.values[0];
    const double steer = ctl.values[1];
    const double m = params_.mass;
    const double lf = params_.lf;
    const double lr = params_.lr;
    const double kf = params_.kf;
    const double kr = params_.kr;
    const double iz = params_.inertia;

    Config n;
    n.x = q.x + ts * (q.u * std::cos(q.theta) - q.v * std::sin(q.theta));
    n.y = q.y + ts * (q.v * std::cos(q.theta) + q.u * std::sin(q.theta));
    n.theta = normalize_angle(q.theta + ts * q.omega);
    // Negative accel is braking: the slip model has no reverse regime, so
    // longitudinal speed saturates at standstill instead of going negative.
    n.u = std::max(0.0, q.u + ts * accel);

    const double uc = q.u < kBikeSpeedFloor ? kBikeSpeedFloor : q.u;
    const double den_v = m * uc - ts * (kf + kr);
    const double den_w = iz * uc - ts * (lf * lf * kf + lr * lr * kr);
    if (std::abs(den_v) < kDegenerateEps || std::abs(den_w) < kDegenerateEps)
        throw DegenerateDynamics("bike update denominator vanished");

    n.v = (m * uc * q.v + ts * (lf * kf - lr * kr) * q.omega - ts * kf * steer * uc -
           ts * m * uc * uc * q.omega) /
          den_v;
    n.omega = (iz * uc * q.omega + ts * (lf * kf - lr * kr) * q.v - ts * lf * kf * steer * uc) /
              den_w;
    return n;
}

void BikeModel::integrate_into(std::vector<Config>& out, const Config& q, const Control& u,
                               double t) const {
    if (!(t > 0.0)) throw std::invalid_argument("integration time must be positive");
    const int steps = rollout_steps(t, params_.ts);
    out.clear();
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.push_back(q);
    Config cur = q;
    for (int i = 0; i < steps; ++i) {
        cur = step(cur, u);
        out.push_back(cur);
    }
}

} // namespace krrf
