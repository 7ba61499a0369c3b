#include "adesign/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adesign {

namespace {

// Next content line with comments ('#' to end of line) and blanks removed.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

std::vector<long long> parse_ints(const std::string& line) {
    std::istringstream ss(line);
    std::vector<long long> xs;
    long long x;
    while (ss >> x) xs.push_back(x);
    std::string rest;
    if (ss.clear(), ss >> rest) throw std::runtime_error("non-integer token in input");
    return xs;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

}  // namespace

IncidenceStructure read_block_file(std::istream& in, bool allow_multiset) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error("empty block file");
    auto header = parse_ints(line);
    if (header.size() != 2) throw std::runtime_error("block file header must be 'v b'");
    long long v = header[0], b = header[1];
    std::vector<std::vector<long long>> blocks;
    blocks.reserve(static_cast<std::size_t>(b));
    for (long long i = 0; i < b; ++i) {
        if (!next_line(in, line)) throw std::runtime_error("block file ends early");
        blocks.push_back(parse_ints(line));
    }
    return IncidenceStructure::from_blocks(v, std::move(blocks), allow_multiset);
}

IncidenceStructure read_block_file(const std::string& path, bool allow_multiset) {
    auto f = open_in(path);
    return read_block_file(f, allow_multiset);
}

void write_block_file(std::ostream& out, const IncidenceStructure& S) {
    out << S.points() << ' ' << S.block_count() << '\n';
    for (const auto& blk : S.blocks()) {
        for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
        out << '\n';
    }
}

void write_block_file(const std::string& path, const IncidenceStructure& S) {
    auto f = open_out(path);
    write_block_file(f, S);
}

IntMatrix read_matrix_file(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error("empty matrix file");
    auto header = parse_ints(line);
    if (header.size() != 1) throw std::runtime_error("matrix file header must be 'n'");
    long long n = header[0];
    if (n < 1) throw std::runtime_error("matrix order must be positive");
    IntMatrix M(n, n);
    for (long long i = 0; i < n; ++i) {
        if (!next_line(in, line)) throw std::runtime_error("matrix file ends early");
        auto row = parse_ints(line);
        if (static_cast<long long>(row.size()) != n)
            throw std::runtime_error("matrix row has the wrong length");
        for (long long j = 0; j < n; ++j) M(i, j) = row[static_cast<std::size_t>(j)];
    }
    return M;
}

IntMatrix read_matrix_file(const std::string& path) {
    auto f = open_in(path);
    return read_matrix_file(f);
}

void write_matrix_file(std::ostream& out, const IntMatrix& M) {
    if (!M.is_square()) throw std::invalid_argument("matrix files hold square matrices");
    out << M.rows() << '\n';
    for (long long i = 0; i < M.rows(); ++i) {
        for (long long j = 0; j < M.cols(); ++j) out << (j ? " " : "") << M(i, j);
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const IntMatrix& M) {
    auto f = open_out(path);
    write_matrix_file(f, M);
}

GroupSubset read_group_subset_file(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error("empty group subset file");
    std::istringstream head(line);
    std::string tag;
    head >> tag;
    if (tag != "group") throw std::runtime_error("group subset file must start with 'group'");
    std::vector<long long> factors;
    long long n;
    while (head >> n) factors.push_back(n);
    AbelianGroup G(factors);
    std::vector<long long> elements;
    while (next_line(in, line)) {
        auto tuple = parse_ints(line);
        elements.push_back(G.index_of(tuple));
    }
    return GroupSubset{G, std::move(elements)};
}

GroupSubset read_group_subset_file(const std::string& path) {
    auto f = open_in(path);
    return read_group_subset_file(f);
}

void write_group_subset_file(std::ostream& out, const GroupSubset& D) {
    out << "group";
    for (long long n : D.group.factors()) out << ' ' << n;
    out << '\n';
    for (long long e : D.elements) {
        auto t = D.group.tuple_of(e);
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
        out << '\n';
    }
}

void write_group_subset_file(const std::string& path, const GroupSubset& D) {
    auto f = open_out(path);
    write_group_subset_file(f, D);
}

ordered_json classification_json(const Classification& c) {
    ordered_json j;
    j["t"] = c.t;
    j["verdict"] = to_string(c.verdict);
    j["lambda"] = c.lambda;
    j["r_min"] = c.r_min;
    j["r_max"] = c.r_max;
    j["count_low"] = c.count_low;
    j["count_high"] = c.count_high;
    j["v"] = c.v;
    j["b"] = c.b;
    j["k"] = c.k;
    return j;
}

ordered_json histogram_json(const ReplicationHistogram& h) {
    ordered_json j;
    j["subsets"] = h.subsets;
    ordered_json counts = ordered_json::array();
    for (const auto& [r, n] : h.counts) counts.push_back({{"r", r}, {"count", n}});
    j["counts"] = counts;
    return j;
}

ordered_json field_json(const FiniteField& F) {
    ordered_json j;
    j["p"] = F.characteristic();
    j["m"] = F.degree();
    j["q"] = F.order();
    j["modulus"] = F.modulus();
    j["gamma"] = F.generator();
    return j;
}

ordered_json srg_params_json(const SrgParams& p) {
    ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["lambda"] = p.lambda;
    j["mu"] = p.mu;
    return j;
}

ordered_json construction_json(const ConstructionReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["v"] = rep.structure.points();
    j["b"] = rep.structure.block_count();
    ordered_json claims = ordered_json::array();
    for (std::size_t i = 0; i < rep.claims.size(); ++i) {
        const auto& c = rep.claims[i];
        ordered_json cj;
        cj["t"] = c.t;
        cj["kind"] = to_string(c.kind);
        cj["v"] = c.v;
        cj["k"] = c.k;
        cj["lambda"] = c.lambda;
        if (c.degenerate) cj["degenerate"] = true;
        if (!c.note.empty()) cj["note"] = c.note;
        if (i < rep.verified.size() && !c.degenerate)
            cj["verified"] = classification_json(rep.verified[i]);
        claims.push_back(cj);
    }
    j["claims"] = claims;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    j["all_verified"] = rep.all_verified();
    return j;
}

ordered_json covering_construction_json(const CoveringConstruction& cc) {
    ordered_json j;
    j["full"] = construction_json(cc.full);
    j["contracted"] = construction_json(cc.contracted);
    j["covering_bound"] = cc.covering_bound_value;
    j["horsley_applicable"] = cc.horsley_applicable;
    j["meets_bound"] = cc.meets_bound;
    return j;
}

ordered_json bound_report_json(const BoundReport& rep) {
    ordered_json j;
    j["v"] = rep.v;
    j["k"] = rep.k;
    j["lambda"] = rep.lambda;
    j["schonheim"] = rep.schonheim;
    j["johnson_at_lambda_plus_1"] = rep.johnson;
    auto horsley = [](const std::optional<HorsleyBound>& h) {
        ordered_json hj;
        hj["applicable"] = h.has_value();
        if (h) {
            hj["value"] = h->value;
            hj["r"] = h->r;
            hj["d"] = h->d;
        }
        return hj;
    };
    j["horsley_covering"] = horsley(rep.horsley_cov);
    j["horsley_packing"] = horsley(rep.horsley_pack);
    j["window"] = {{"lower", rep.lower}, {"upper", rep.upper}};
    return j;
}

ordered_json feasibility_json(const FeasibilityReport& rep) {
    ordered_json j;
    j["v"] = rep.v;
    j["k"] = rep.k;
    j["t"] = rep.t;
    j["lambda"] = rep.lambda;
    j["ratio_condition"] = rep.ratio_condition;
    j["adesign_lambda"] = rep.adesign_lambda;
    j["design_lambda"] = {rep.design_lambda_lo, rep.design_lambda_hi};
    j["floor_identity"] = {rep.floor_identity_lo, rep.floor_identity_hi};
    j["block_interval"] = {{"lower_num", rep.block_lower.num},
                           {"lower_den", rep.block_lower.den},
                           {"upper_num", rep.block_upper.num},
                           {"upper_den", rep.block_upper.den}};
    return j;
}

}  // namespace adesign
