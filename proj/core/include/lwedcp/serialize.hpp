#pragma once

#include <string>

#include "lwedcp/collapse.hpp"
#include "lwedcp/dcpmap.hpp"
#include "lwedcp/dcpsolve.hpp"
#include "lwedcp/lattice.hpp"
#include "lwedcp/params.hpp"
#include "lwedcp/sampling.hpp"

// JSON forms of the artifact types. Integers that may exceed 64 bits (q, M,
// R, matrix entries, packed values, seeds) are decimal strings.

namespace lwedcp {

std::string to_json(const ReductionParams& p);
ReductionParams params_from_json(const std::string& text);

std::string to_json(const LweInstance& inst);
LweInstance instance_from_json(const std::string& text);

std::string to_json(const Basis& basis);
Basis basis_from_json(const std::string& text);

// single-line forms for the JSONL stage files
std::string record_to_json_line(const TwoPointRecord& rec);
TwoPointRecord record_from_json_line(const std::string& line);

std::string sample_to_json_line(const DcpSample& s);
DcpSample sample_from_json_line(const std::string& line);

std::string to_json(const SolveReport& rep);

}  // namespace lwedcp
