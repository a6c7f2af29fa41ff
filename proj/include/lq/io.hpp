#pragma once

#include "lq/aqs.hpp"
#include "lq/error.hpp"
#include "lq/logic.hpp"
#include "lq/qstate.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lq {

class IoError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string &path);

/// One "re im" pair per line in basis-index order; '#' starts a comment.
std::vector<Amplitude> parse_amplitudes(std::string_view text);
std::string format_amplitudes(std::span<const Amplitude> amps);

/// Compact single-line form used by `run`: [re im, re im, ...]
std::string format_state(const QuantumState &s);

/// Model file: "qubits n", AQS lines, and "bind name : type = value" lines.
Model parse_model(std::string_view text);
std::string format_model(const Model &m);

/// Oracle output: every block of the partition, then the base-state qubits.
struct OracleReport {
    std::vector<QubitSet> blocks;
    QubitSet base;
    bool operator==(const OracleReport &) const = default;
};

OracleReport oracle_report(const QuantumState &s, double tol);
std::string format_oracle(const OracleReport &r);
OracleReport parse_oracle(std::string_view text);

} // namespace lq
