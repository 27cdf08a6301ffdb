#pragma once

#include "cdvwall/bps.hpp"
#include "cdvwall/dynkin.hpp"
#include "cdvwall/restriction.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdvwall::cli {

inline const char* const kVersion = "0.1.0";

const std::vector<std::string>& commands();

// bad flags or config fields; reported with exit status 2
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    std::optional<Family> family;
    std::optional<int> rank;
    bool affine = false;
    std::optional<NodeSet> contracted;  // absent: sweep commands run over all proper subsets
    long long kmax = 3;
    long long maxlen = 6;
    bool rigidified = false;
    bool weighted_homogeneous = false;
    NodeSet non_flop;
    SymmetryWindow window;
    std::string format = "json";
    std::string out;  // empty: standard output
    std::optional<int> n;  // dihedral-check

    bool operator==(const JobConfig&) const = default;
};

// the metadata header of every JSON output; also the config-file schema
std::string to_json(const JobConfig& c, const std::string& command = "");
// fields present in the document replace those of base; unknown fields and
// wrong types raise UsageError naming the field
JobConfig merge_json(const JobConfig& base, const std::string& document);

NodeSet parse_node_list(const std::string& s);
SymmetryWindow parse_window(const std::string& s);

// the diagram/type named by the config; UsageError if incomplete
DiagramPtr config_diagram(const JobConfig& c);
DynkinType config_type(const JobConfig& c);

struct Artifact {
    std::string body;
    int status = 0;  // nonzero on any invariant violation or oracle mismatch
    std::string summary;  // one line for stderr
};

// builds the artifact; throws UsageError for malformed configs
Artifact execute(const std::string& command, const JobConfig& config);

// execute and write the artifact to config.out (or out); returns the exit status
int run(const std::string& command, const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cdvwall::cli
