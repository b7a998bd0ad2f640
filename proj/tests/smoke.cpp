#include <cstdio>
#include "krrf/trial.hpp"

int main(int argc, char** argv) {
    const char* scn = argc > 1 ? argv[1] : "/root/proj/scenarios/potholes_car_5.scn";
    const char* planner = argc > 2 ? argv[2] : "krrf";
    uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 1;
    try {
        krrf::Scenario s = krrf::load_scenario(scn);
        s.seed = seed;
        auto out = krrf::run_trial_full(s, krrf::planner_from_name(planner));
        std::printf("%s\n", krrf::csv_header().c_str());
        std::printf("%s\n", krrf::to_csv_row(out.record).c_str());
        if (out.trajectory) {
            std::printf("legs=%zu cost=%.2f\n", out.trajectory->legs.size(),
                        out.trajectory->total_cost());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fatal: %s\n", e.what());
        return 1;
    }
    return 0;
}
