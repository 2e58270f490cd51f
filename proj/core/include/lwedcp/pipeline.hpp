#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lwedcp/serialize.hpp"
#include "lwedcp/verify.hpp"

namespace lwedcp {

struct PipelineConfig {
    int n = 2;
    std::uint64_t seed = 0;
    Overrides overrides;
    std::string t_policy = "lambda1";  // lambda1 | claimed
    std::string eta_mode = "verify";   // verify | enumerate
    std::string stage = "all";         // all | gen | lattice | two-point | dcp | solve
    std::filesystem::path out_dir;
    long budget = 1L << 24;
    long records = 0;  // 0: m * ceil(log2 M)
};

// In-memory outcome of the full reduction chain for one seed.
struct ReductionOutcome {
    bool stages_ok = false;
    std::string failure;  // first failing stage + diagnostic, empty when ok
    PreparedInstance prep;
    TwoPointInput two_point;
    std::vector<DcpSample> samples;
    SolveReport solve;
    double model_rate = 0;     // exact per-register pairing probability
    long valid_samples = 0;
    bool difference_cross_check = false;  // DCP route agrees with direct extraction
};

ReductionOutcome run_reduction(const ReductionParams& params, std::uint64_t seed,
                               const std::string& t_policy = "lambda1",
                               const std::string& eta_mode = "verify", long records = 0,
                               long budget = 1L << 24);

struct StageStatus {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PipelineResult {
    bool matched = false;
    std::vector<StageStatus> stages;
};

// Runs the requested stage(s), reading/writing JSON artifacts under
// config.out_dir: params.json, instance.json, lattice.json, twopoint.jsonl,
// dcp.jsonl, solve.json, report.json. Exit semantics: matched == true is
// success for the full chain.
PipelineResult run_pipeline(const PipelineConfig& config);

// `solve` entry used by the CLI: recomputes the reduced basis and Babai
// translation deterministically from the instance, then recovers the secret
// from DCP samples.
SolveReport solve_from_files(const std::filesystem::path& instance_file,
                             const std::filesystem::path& dcp_file,
                             const ReductionParams& params);

}  // namespace lwedcp
