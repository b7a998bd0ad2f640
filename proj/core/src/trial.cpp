#include "krrf/trial.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "krrf/errors.hpp"
#include "krrf/trajectory.hpp"

namespace krrf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sanitize_reason(std::string reason) {
    std::replace(reason.begin(), reason.end(), ',', ';');
    std::replace(reason.begin(), reason.end(), '\n', ' ');
    return reason;
}

bool doubles_equal(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

} // namespace

std::string_view planner_name(PlannerKind kind) {
    return kind == PlannerKind::krrf ? "krrf" : "lazytsp";
}

PlannerKind planner_from_name(const std::string& name) {
    if (name == "krrf") return PlannerKind::krrf;
    if (name == "lazytsp") return PlannerKind::lazytsp;
    throw ParseError("unknown planner '" + name + "' (expected krrf or lazytsp)");
}

bool records_equal(const TrialRecord& a, const TrialRecord& b, bool ignore_timings) {
    if (a.scenario_id != b.scenario_id || a.planner != b.planner || a.seed != b.seed ||
        a.success != b.success || !doubles_equal(a.cost, b.cost) ||
        a.fail_reason != b.fail_reason)
        return false;
    if (ignore_timings) return true;
    return doubles_equal(a.t_forest, b.t_forest) && doubles_equal(a.t_tsp, b.t_tsp) &&
           doubles_equal(a.t_guide, b.t_guide) && doubles_equal(a.t_total, b.t_total);
}

TrialOutput run_trial_full(const Scenario& scenario, PlannerKind kind) {
    TrialOutput out;
    TrialRecord& rec = out.record;
    rec.scenario_id = scenario.id;
    rec.planner = std::string(planner_name(kind));
    rec.seed = scenario.seed;

    // Configuration problems are the caller's to handle, not a trial outcome.
    const World world = load_world(scenario);
    const auto model = make_model(scenario.model);
    for (const Point2& t : scenario.targets) {
        if (world.point_collides(t))
            throw ParseError("target (" + fmt_double(t.x) + ", " + fmt_double(t.y) +
                             ") is not collision-free");
    }

    const Deadline deadline = Deadline::after_seconds(scenario.time_limit);
    Rng rng(scenario.seed);
    const auto t_start = Clock::now();

    try {
        if (kind == PlannerKind::krrf) {
            const auto t_forest = Clock::now();
            ForestPlanner forest(world, *model, scenario.targets, scenario.planner, rng);
            PairTrajectories pairs = forest.build(deadline);
            rec.t_forest = seconds_since(t_forest);

            const auto t_tsp = Clock::now();
            const DistanceMatrix matrix = matrix_from_forest(pairs);
            Tour tour = matrix.n <= 15 ? solve_exact(matrix) : solve_heuristic(matrix, rng);
            rec.t_tsp = seconds_since(t_tsp);

            const auto t_guide = Clock::now();
            MultiGoalTrajectory mgt =
                reconstruct(world, *model, scenario.targets, tour.order, pairs,
                            scenario.planner, scenario.guide, rng, deadline);
            rec.t_guide = seconds_since(t_guide);
            out.tour_order = tour.order;
            out.trajectory = std::move(mgt);
        } else {
            LazyPhaseTimes times;
            Tour tour;
            MultiGoalTrajectory mgt =
                lazy_plan(world, *model, scenario.targets, scenario.planner, scenario.guide,
                          scenario.lazy, rng, deadline, &times, &tour);
            rec.t_forest = times.edge_planning;
            rec.t_tsp = times.tsp;
            rec.t_guide = times.reconstruct;
            out.tour_order = tour.order;
            out.trajectory = std::move(mgt);
        }

        const ValidationReport report =
            validate(*out.trajectory, world, *model, scenario.targets, out.tour_order,
                     scenario.planner.target_radius);
        if (!report.ok()) {
            rec.success = false;
            rec.fail_reason = "validation_failed";
            out.trajectory.reset();
        } else {
            rec.success = true;
            rec.cost = out.trajectory->total_cost();
        }
    } catch (const ForestTimeout& e) {
        rec.fail_reason = deadline.expired() ? "timeout" : "forest_timeout";
        rec.fail_reason += std::string(": ") + e.what();
    } catch (const ReconstructFailure& e) {
        rec.fail_reason = deadline.expired() ? "timeout" : "reconstruct_failure";
        rec.fail_reason += std::string(": ") + e.what();
    } catch (const BaselineFailure& e) {
        rec.fail_reason = deadline.expired() ? "timeout" : "baseline_failure";
        rec.fail_reason += std::string(": ") + e.what();
    } catch (const Error& e) {
        rec.fail_reason = std::string("error: ") + e.what();
    }
    rec.fail_reason = sanitize_reason(rec.fail_reason);
    rec.t_total = seconds_since(t_start);
    return out;
}

TrialRecord run_trial(const Scenario& scenario, PlannerKind kind) {
    return run_trial_full(scenario, kind).record;
}

BatchSummary summarize(std::span<const TrialRecord> records) {
    BatchSummary s;
    s.trials = static_cast<int>(records.size());
    std::vector<double> costs, times;
    for (const TrialRecord& r : records) {
        if (!r.success) continue;
        ++s.successes;
        costs.push_back(r.cost);
        times.push_back(r.t_total);
    }
    s.success_rate = s.trials == 0 ? 0.0 : static_cast<double>(s.successes) / s.trials;
    auto mean_std = [](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        var /= static_cast<double>(v.size());
        return std::pair<double, double>(mean, std::sqrt(var));
    };
    if (!costs.empty()) {
        const auto [cm, cs] = mean_std(costs);
        s.cost_mean = cm;
        s.cost_std = cs;
        const auto [tm, td] = mean_std(times);
        s.time_mean = tm;
        s.time_std = td;
    }
    return s;
}

BatchResult run_batch(const Scenario& scenario, PlannerKind kind, int n_trials,
                      uint64_t seed_base, int jobs) {
    BatchResult result;
    result.records.resize(static_cast<std::size_t>(std::max(0, n_trials)));
    if (n_trials <= 0) return result;
    jobs = std::clamp(jobs, 1, n_trials);

    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= n_trials) return;
            Scenario s = scenario;
            s.seed = seed_base + static_cast<uint64_t>(i);
            result.records[i] = run_trial(s, kind);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    result.summary = summarize(result.records);
    return result;
}

std::string csv_header() {
    return "scenario,planner,seed,success,cost,t_forest,t_tsp,t_guide,t_total,fail_reason";
}

std::string to_csv_row(const TrialRecord& r) {
    std::ostringstream out;
    out << r.scenario_id << ',' << r.planner << ',' << r.seed << ',' << (r.success ? 1 : 0)
        << ',' << fmt_double(r.cost) << ',' << fmt_double(r.t_forest) << ','
        << fmt_double(r.t_tsp) << ',' << fmt_double(r.t_guide) << ',' << fmt_double(r.t_total)
        << ',' << r.fail_reason;
    return out.str();
}

TrialRecord parse_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    if (fields.size() != 10) throw ParseError("csv row needs 10 fields");

    TrialRecord r;
    r.scenario_id = fields[0];
    r.planner = fields[1];
    try {
        r.seed = std::stoull(fields[2]);
        r.success = std::stoi(fields[3]) != 0;
        r.cost = std::stod(fields[4]);
        r.t_forest = std::stod(fields[5]);
        r.t_tsp = std::stod(fields[6]);
        r.t_guide = std::stod(fields[7]);
        r.t_total = std::stod(fields[8]);
    } catch (const std::exception&) {
        throw ParseError("csv row has a malformed numeric field");
    }
    r.fail_reason = fields[9];
    return r;
}

std::string serialize_trajectory(const MultiGoalTrajectory& mgt, std::string_view model_name) {
    std::ostringstream out;
    out << "trajectory v1\n";
    out << "model " << model_name << "\n";
    out << "legs " << mgt.legs.size() << "\n";
    for (std::size_t i = 0; i < mgt.legs.size(); ++i) {
        const Trajectory& t = mgt.legs[i];
        const LegInfo info = i < mgt.info.size() ? mgt.info[i] : LegInfo{};
        out << "leg " << t.segments.size() << " " << info.target_index << " "
            << info.iterations_used << "\n";
        const Config& s = t.start();
        out << "start " << fmt_double(s.x) << " " << fmt_double(s.y) << " " << fmt_double(s.theta)
            << " " << fmt_double(s.u) << " " << fmt_double(s.v) << " " << fmt_double(s.omega)
            << "\n";
        for (const Segment& seg : t.segments) {
            out << "seg " << fmt_double(seg.control.values[0]) << " "
                << fmt_double(seg.control.values[1]) << " " << fmt_double(seg.duration) << "\n";
        }
    }
    return out.str();
}

MultiGoalTrajectory parse_trajectory(const std::string& text, const Model& model) {
    std::istringstream in(text);
    std::string token;
    auto expect = [&](const std::string& want) {
        if (!(in >> token) || token != want)
            throw ParseError("trajectory dump: expected '" + want + "'");
    };
    expect("trajectory");
    expect("v1");
    expect("model");
    std::string model_name;
    if (!(in >> model_name)) throw ParseError("trajectory dump: missing model name");
    if (model_name != model.name())
        throw ParseError("trajectory dump was produced with model '" + model_name +
                         "', scenario uses '" + std::string(model.name()) + "'");
    expect("legs");
    std::size_t leg_count = 0;
    if (!(in >> leg_count)) throw ParseError("trajectory dump: missing leg count");

    MultiGoalTrajectory mgt;
    std::vector<Config> buf;
    for (std::size_t leg = 0; leg < leg_count; ++leg) {
        expect("leg");
        std::size_t n_segs = 0;
        LegInfo info;
        if (!(in >> n_segs >> info.target_index >> info.iterations_used))
            throw ParseError("trajectory dump: malformed leg header");
        expect("start");
        Config cur;
        if (!(in >> cur.x >> cur.y >> cur.theta >> cur.u >> cur.v >> cur.omega))
            throw ParseError("trajectory dump: malformed start state");
        Trajectory t;
        for (std::size_t s = 0; s < n_segs; ++s) {
            expect("seg");
            Segment seg;
            if (!(in >> seg.control.values[0] >> seg.control.values[1] >> seg.duration))
                throw ParseError("trajectory dump: malformed segment");
            seg.start = cur;
            model.integrate_into(buf, cur, seg.control, seg.duration);
            seg.samples = buf;
            cur = buf.back();
            t.total_length += trajectory_length(seg.samples);
            t.segments.push_back(std::move(seg));
        }
        if (t.segments.empty()) throw ParseError("trajectory dump: leg without segments");
        mgt.legs.push_back(std::move(t));
        mgt.info.push_back(info);
    }
    return mgt;
}

void write_trajectory_file(const std::string& path, const MultiGoalTrajectory& mgt,
                           std::string_view model_name) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write trajectory file: " + path);
    out << serialize_trajectory(mgt, model_name);
}

MultiGoalTrajectory load_trajectory_file(const std::string& path, const Model& model) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open trajectory file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_trajectory(buf.str(), model);
}

std::vector<int> tour_order_of(const MultiGoalTrajectory& mgt) {
    std::vector<int> order;
    if (mgt.info.empty()) return order;
    order.push_back(mgt.info.back().target_index);
    for (std::size_t i = 0; i + 1 < mgt.info.size(); ++i)
        order.push_back(mgt.info[i].target_index);
    return order;
}

} // namespace krrf
