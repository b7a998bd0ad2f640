#pragma once

#include <array>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "krrf/rng.hpp"
#include "krrf/state.hpp"

namespace krrf {

struct CarParams {
    double axle_length = 30.0; // front-to-rear axle distance

    friend bool operator==(const CarParams&, const CarParams&) = default;
};

struct DiffParams {
    double wheel_base = 20.0;   // left-to-right wheel separation
    double wheel_radius = 20.0;

    friend bool operator==(const DiffParams&, const DiffParams&) = default;
};

/// Discrete-time bike dynamics constants. The six physical constants carry no
/// defaults; scenarios must set them explicitly.
struct BikeParams {
    double ts = 0.05; // native step, doubles as the sampling resolution
    double mass = 0.0;
    double lf = 0.0; // center of gravity to front axle
    double lr = 0.0; // center of gravity to rear axle
    double kf = 0.0; // front cornering stiffness
    double kr = 0.0; // rear cornering stiffness
    double inertia = 0.0; // yaw inertia

    friend bool operator==(const BikeParams&, const BikeParams&) = default;
};

/// Forward kinodynamic motion model. Immutable parameter bundle; integrate is
/// pure given (q, u, t) and safe for concurrent use.
class Model {
public:
    virtual ~Model() = default;

    virtual std::string_view name() const = 0;

    /// Each control component uniform over its admissible interval.
    virtual Control sample_control(Rng& rng) const = 0;

    /// Admissible interval per control component, for tests and samplers.
    virtual std::array<std::pair<double, double>, 2> control_bounds() const = 0;

    /// Rolls the model forward for (a quantized version of) t seconds under
    /// the constant control u. Output holds the start state plus one state per
    /// step; `out` is cleared first. The realized duration is
    /// step_dt() * (out.size() - 1), which replays bit-exactly.
    virtual void integrate_into(std::vector<Config>& out, const Config& q, const Control& u,
                                double t) const = 0;

    std::vector<Config> integrate(const Config& q, const Control& u, double t) const {
        std::vector<Config> out;
        integrate_into(out, q, u, t);
        return out;
    }

    /// Sampling resolution of integrate (the RK4 step, or the bike's native step).
    virtual double step_dt() const = 0;

    /// Number of velocity states the model actually uses (0 or 3).
    virtual int aux_dimension() const = 0;
};

class CarModel : public Model {
public:
    CarModel(CarParams params, double dt) : params_(params), dt_(dt) {}

    std::string_view name() const override { return "car"; }
    Control sample_control(Rng& rng) const override;
    std::array<std::pair<double, double>, 2> control_bounds() const override;
    void integrate_into(std::vector<Config>& out, const Config& q, const Control& u,
                        double t) const override;
    double step_dt() const override { return dt_; }
    int aux_dimension() const override { return 0; }

    const CarParams& params() const { return params_; }

protected:
    CarParams params_;
    double dt_;
};

/// Car with the speed input pinned to a constant; only steering is sampled.
class DubinsModel : public CarModel {
public:
    DubinsModel(CarParams params, double dt, double speed)
        : CarModel(params, dt), speed_(speed) {}

    std::string_view name() const override { return "dubins"; }
    Control sample_control(Rng& rng) const override;
    std::array<std::pair<double, double>, 2> control_bounds() const override;

    double speed() const { return speed_; }

private:
    double speed_;
};

class DiffDriveModel : public Model {
public:
    DiffDriveModel(DiffParams params, double dt) : params_(params), dt_(dt) {}

    std::string_view name() const override { return "diff"; }
    Control sample_control(Rng& rng) const override;
    std::array<std::pair<double, double>, 2> control_bounds() const override;
    void integrate_into(std::vector<Config>& out, const Config& q, const Control& u,
                        double t) const override;
    double step_dt() const override { return dt_; }
    int aux_dimension() const override { return 0; }

    const DiffParams& params() const { return params_; }

private:
    DiffParams params_;
    double dt_;
};

class BikeModel : public Model {
public:
    explicit BikeModel(BikeParams params);

    std::string_view name() const override { return "bike"; }
    Control sample_control(Rng& rng) const override;
    std::array<std::pair<double, double>, 2> control_bounds() const override;
    void integrate_into(std::vector<Config>& out, const Config& q, const Control& u,
                        double t) const override;
    double step_dt() const override { return params_.ts; }
    int aux_dimension() const override { return 3; }

    /// One discrete update. Longitudinal speed is clamped from below inside
    /// the lateral/yaw updates to stay clear of the low-speed singularity.
    Config step(const Config& q, const Control& u) const;

    const BikeParams& params() const { return params_; }

private:
    BikeParams params_;
};

/// Number of whole integrator steps covering t (at least one). Computed with
/// slack so a realized duration N*dt maps back to exactly N steps.
inline int rollout_steps(double t, double dt) {
    const int n = static_cast<int>(std::ceil(t / dt - 1e-9));
    return n < 1 ? 1 : n;
}

} // namespace krrf
