#pragma once

#include "lq/entails.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lq {

/// {pre} subject :anchor {post}; a pair anchor <u, v> names both components.
struct Judgment {
    AssertionPtr pre;
    TermPtr subject;
    std::vector<std::string> anchor;
    TypePtr type;
    AssertionPtr post;
};

struct ProofNode {
    std::string rule;
    Judgment conclusion;
    std::vector<ProofNode> premises;
    // context additions, inherited by premises
    int qubits = 0;
    std::map<std::string, TypePtr> vars;
    NameTypes anchors;
};

/// One tree or a JSON array of trees.
std::vector<ProofNode> parse_proofs(std::string_view json_text);
ProofNode parse_proof(std::string_view json_text);

struct Verdict {
    bool accepted = true;
    std::string reason;
    std::string path; ///< e.g. "premises[0].premises[1]"; "[k]." prefix inside a bundle
};

Verdict check_judgment(const ProofNode &root);
Verdict check_proofs(const std::vector<ProofNode> &roots);

/// Anchor as a logic term: u, or <u, v>.
LTermPtr anchor_term(const Judgment &j);

struct SoundnessReport {
    bool sound = true;
    std::size_t models = 0;  ///< models of the precondition examined
    std::size_t results = 0; ///< abstract terminals examined
    std::string failure;
};

/// Semantic check of a closed conclusion: for every well-formed AQS and
/// interpretation satisfying the pre, every abstract terminal, with the
/// anchor bound to its value, satisfies the post. Names of the post bound
/// nowhere else are read existentially.
SoundnessReport check_soundness(const ProofNode &root);

} // namespace lq
