#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "adesign/algebra.hpp"
#include "adesign/bounds.hpp"
#include "adesign/builders.hpp"
#include "adesign/graphs.hpp"
#include "adesign/incidence.hpp"
#include "adesign/setdiff.hpp"

namespace adesign {

using ordered_json = nlohmann::ordered_json;

// Block file: line 1 "v b", then b lines of space-separated sorted 0-based
// point indices, one block per line. '#' starts a comment.
IncidenceStructure read_block_file(std::istream& in, bool allow_multiset = true);
IncidenceStructure read_block_file(const std::string& path, bool allow_multiset = true);
void write_block_file(std::ostream& out, const IncidenceStructure& S);
void write_block_file(const std::string& path, const IncidenceStructure& S);

// Matrix file: line 1 "n", then n lines of n space-separated integers.
IntMatrix read_matrix_file(std::istream& in);
IntMatrix read_matrix_file(const std::string& path);
void write_matrix_file(std::ostream& out, const IntMatrix& M);
void write_matrix_file(const std::string& path, const IntMatrix& M);

// Group subset file: line 1 "group n_1 n_2 ... n_r", then one element tuple
// per line.
GroupSubset read_group_subset_file(std::istream& in);
GroupSubset read_group_subset_file(const std::string& path);
void write_group_subset_file(std::ostream& out, const GroupSubset& D);
void write_group_subset_file(const std::string& path, const GroupSubset& D);

// JSON payloads with fixed key order.
ordered_json classification_json(const Classification& c);
ordered_json histogram_json(const ReplicationHistogram& h);
ordered_json field_json(const FiniteField& F);
ordered_json srg_params_json(const SrgParams& p);
ordered_json construction_json(const ConstructionReport& rep);
ordered_json covering_construction_json(const CoveringConstruction& cc);
ordered_json bound_report_json(const BoundReport& rep);
ordered_json feasibility_json(const FeasibilityReport& rep);

}  // namespace adesign
