#include "mhess/freemodule.hpp"

#include <json.hpp>

#include "mhess/errors.hpp"
#include "mhess/textio.hpp"

namespace mhess {

void FreeModule::add(std::string label, int twist) {
    for (const auto& g : gens_)
        if (g.label == label) throw ContractError("duplicate generator label: " + label);
    gens_.push_back(Generator{std::move(label), twist});
}

long FreeModule::twist_sum() const {
    long s = 0;
    for (const auto& g : gens_) s += g.twist;
    return s;
}

FreeModule FreeModule::relabeled(const std::string& prefix) const {
    FreeModule out;
    for (const auto& g : gens_) out.add(prefix + g.label, g.twist);
    return out;
}

FreeModule FreeModule::concat(const FreeModule& a, const FreeModule& b) {
    FreeModule out = a;
    for (const auto& g : b.gens_) out.add(g.label, g.twist);
    return out;
}

bool FreeModule::operator==(const FreeModule& o) const {
    if (gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].label != o.gens_[i].label || gens_[i].twist != o.gens_[i].twist)
            return false;
    return true;
}

PolyMatrix::PolyMatrix(FreeModule rows, FreeModule cols, int nx)
    : rows_(std::move(rows)), cols_(std::move(cols)), nx_(nx) {}

void PolyMatrix::set(int i, int j, Poly p) {
    if (i < 0 || i >= n_rows() || j < 0 || j >= n_cols())
        throw ContractError("matrix entry out of range");
    if (p.is_zero())
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(p);
}

void PolyMatrix::add(int i, int j, const Poly& p) { set(i, j, entry(i, j) + p); }

Poly PolyMatrix::entry(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Poly(nx_, 0) : it->second;
}

PolyMatrix PolyMatrix::negated() const {
    PolyMatrix out(rows_, cols_, nx_);
    for (const auto& [ij, p] : entries_) out.entries_[ij] = -p;
    return out;
}

PolyMatrix PolyMatrix::compose(const PolyMatrix& inner) const {
    if (!(cols_ == inner.rows_))
        throw LayoutError("matrix composition: inner target does not match outer source");
    PolyMatrix out(rows_, inner.cols_, nx_);
    std::map<int, std::vector<std::pair<int, const Poly*>>> inner_by_row;
    for (const auto& [ij, p] : inner.entries_) inner_by_row[ij.first].push_back({ij.second, &p});
    for (const auto& [ij, p] : entries_) {
        auto it = inner_by_row.find(ij.second);
        if (it == inner_by_row.end()) continue;
        for (const auto& [k, q] : it->second) out.add(ij.first, k, p * *q);
    }
    return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_idx,
                                 const std::vector<int>& col_idx) const {
    FreeModule r, c;
    for (int i : row_idx) r.add(rows_.gen(i).label, rows_.gen(i).twist);
    for (int j : col_idx) c.add(cols_.gen(j).label, cols_.gen(j).twist);
    PolyMatrix out(std::move(r), std::move(c), nx_);
    for (std::size_t a = 0; a < row_idx.size(); ++a)
        for (std::size_t b = 0; b < col_idx.size(); ++b) {
            auto it = entries_.find({row_idx[a], col_idx[b]});
            if (it != entries_.end())
                out.entries_[{static_cast<int>(a), static_cast<int>(b)}] = it->second;
        }
    return out;
}

std::optional<std::string> PolyMatrix::homogeneity_violation() const {
    for (const auto& [ij, p] : entries_) {
        if (p.is_zero()) continue;
        const Generator& r = rows_.gen(ij.first);
        const Generator& c = cols_.gen(ij.second);
        if (!p.is_homogeneous())
            return "entry (" + r.label + ", " + c.label + ") is not homogeneous";
        if (p.degree() != r.twist - c.twist)
            return "entry (" + r.label + ", " + c.label + ") has degree " +
                   std::to_string(p.degree()) + ", expected " +
                   std::to_string(r.twist - c.twist);
    }
    return std::nullopt;
}

std::vector<std::vector<std::uint64_t>> PolyMatrix::evaluate_mod_p(
    const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    std::vector<std::vector<std::uint64_t>> out(
        n_rows(), std::vector<std::uint64_t>(n_cols(), 0));
    for (const auto& [ij, poly] : entries_)
        out[ij.first][ij.second] = poly.evaluate_mod_p(point, p);
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

Complex::Complex(std::vector<FreeModule> terms, std::vector<PolyMatrix> diffs, int nx)
    : terms_(std::move(terms)), diffs_(std::move(diffs)), nx_(nx) {
    if (terms_.empty()) throw ContractError("complex needs at least one term");
    if (diffs_.size() + 1 != terms_.size())
        throw ContractError("complex needs one differential per consecutive term pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (!(diffs_[i].rows() == terms_[i] && diffs_[i].cols() == terms_[i + 1]))
            throw ContractError("differential " + std::to_string(i + 1) +
                                " does not match its terms");
    }
}

std::vector<int> Complex::ranks() const {
    std::vector<int> out;
    for (const auto& t : terms_) out.push_back(t.rank());
    return out;
}

long Complex::chi() const {
    long s = 0;
    int sign = 1;
    for (const auto& t : terms_) {
        s += sign * t.rank();
        sign = -sign;
    }
    return s;
}

long Complex::twist_degree() const {
    long s = 0;
    int sign = 1;
    for (const auto& t : terms_) {
        s += sign * t.twist_sum();
        sign = -sign;
    }
    return s;
}

namespace {

// Zero test for a whole matrix, exact or modulo an ideal; returns the first
// offending entry's description.
std::optional<std::string> nonzero_entry(const PolyMatrix& mat, const IdealSpec* ideal,
                                         const std::string& what) {
    for (const auto& [ij, p] : mat.entries()) {
        Poly r = ideal == nullptr ? p : ideal->reduce(p);
        if (!r.is_zero())
            return what + " at (" + mat.rows().gen(ij.first).label + ", " +
                   mat.cols().gen(ij.second).label + ")";
    }
    return std::nullopt;
}

}  // namespace

CheckReport check_complex(const Complex& cx, const IdealSpec* ideal) {
    for (int i = 1; i <= cx.top_degree(); ++i) {
        if (auto v = cx.diff(i).homogeneity_violation())
            return {false, "d_" + std::to_string(i) + ": " + *v};
    }
    for (int i = 1; i + 1 <= cx.top_degree(); ++i) {
        PolyMatrix prod = cx.diff(i).compose(cx.diff(i + 1));
        if (auto v = nonzero_entry(prod, ideal,
                                   "d_" + std::to_string(i) + " d_" + std::to_string(i + 1) +
                                       " nonzero"))
            return {false, *v};
    }
    return {};
}

CheckReport check_map(const ComplexMap& f, const IdealSpec* ideal) {
    if (static_cast<int>(f.blocks.size()) != f.source.top_degree() + 1)
        return {false, "map needs one block per source term"};
    const int sign = f.shift % 2 == 0 ? 1 : -1;
    for (std::size_t k = 0; k < f.blocks.size(); ++k) {
        if (auto v = f.blocks[k].homogeneity_violation())
            return {false, "block " + std::to_string(k) + ": " + *v};
    }
    for (int k = 1; k <= f.source.top_degree(); ++k) {
        // d_tgt(k+shift) * block_k = sign * block_{k-1} * d_src(k) on term_k.
        PolyMatrix rhs = f.blocks[k - 1].compose(f.source.diff(k));
        PolyMatrix dif = k + f.shift <= f.target.top_degree()
                             ? f.target.diff(k + f.shift).compose(f.blocks[k])
                             : PolyMatrix(rhs.rows(), rhs.cols(), rhs.nx());
        for (const auto& [ij, p] : rhs.entries())
            dif.add(ij.first, ij.second, sign < 0 ? p : -p);
        if (auto v = nonzero_entry(dif, ideal, "commutation defect"))
            return {false, "degree " + std::to_string(k) + ": " + *v};
    }
    return {};
}

Complex cone(const ComplexMap& f) {
    if (f.shift != 0) throw ContractError("cone expects a degree-0 map");
    const Complex& S = f.source;
    const Complex& T = f.target;
    const int top = std::max(S.top_degree() + 1, T.top_degree());
    const int nx = T.nx();
    auto src_term = [&](int k) {
        return k >= 0 && k <= S.top_degree() ? S.term(k).relabeled("s:") : FreeModule();
    };
    auto tgt_term = [&](int k) {
        return k >= 0 && k <= T.top_degree() ? T.term(k).relabeled("t:") : FreeModule();
    };
    std::vector<FreeModule> terms;
    for (int k = 0; k <= top; ++k)
        terms.push_back(FreeModule::concat(src_term(k - 1), tgt_term(k)));
    std::vector<PolyMatrix> diffs;
    for (int k = 1; k <= top; ++k) {
        PolyMatrix d(terms[k - 1], terms[k], nx);
        const int sr = src_term(k - 2).rank();  // row offset of tgt block
        const int sc = src_term(k - 1).rank();  // col offset of tgt block
        if (k - 1 >= 1 && k - 1 <= S.top_degree()) {  // -d_src: src_{k-1} -> src_{k-2}
            for (const auto& [ij, p] : S.diff(k - 1).entries())
                d.set(ij.first, ij.second, -p);
        }
        if (k >= 1 && k <= T.top_degree()) {  // d_tgt: tgt_k -> tgt_{k-1}
            for (const auto& [ij, p] : T.diff(k).entries())
                d.set(sr + ij.first, sc + ij.second, p);
        }
        if (k - 1 <= static_cast<int>(f.blocks.size()) - 1 && k - 1 >= 0) {
            // f: src_{k-1} -> tgt_{k-1}, placed into the tgt rows.
            for (const auto& [ij, p] : f.blocks[k - 1].entries())
                d.set(sr + ij.first, ij.second, p);
        }
        diffs.push_back(std::move(d));
    }
    return Complex(std::move(terms), std::move(diffs), nx);
}

std::string complex_to_json(const Complex& cx) {
    nlohmann::json j;
    j["nx"] = cx.nx();
    j["terms"] = nlohmann::json::array();
    for (int k = 0; k <= cx.top_degree(); ++k) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& g : cx.term(k).generators())
            t.push_back({{"label", g.label}, {"twist", g.twist}});
        j["terms"].push_back(t);
    }
    j["diffs"] = nlohmann::json::array();
    for (int i = 1; i <= cx.top_degree(); ++i) {
        nlohmann::json m = nlohmann::json::array();
        for (const auto& [ij, p] : cx.diff(i).entries())
            m.push_back({{"row", ij.first}, {"col", ij.second}, {"poly", poly_to_string(p)}});
        j["diffs"].push_back(m);
    }
    return j.dump(2);
}

Complex complex_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int nx = j.at("nx").get<int>();
    std::vector<FreeModule> terms;
    for (const auto& t : j.at("terms")) {
        FreeModule m;
        for (const auto& g : t) m.add(g.at("label").get<std::string>(), g.at("twist").get<int>());
        terms.push_back(std::move(m));
    }
    std::vector<PolyMatrix> diffs;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        PolyMatrix d(terms[i], terms[i + 1], nx);
        for (const auto& e : j.at("diffs").at(i))
            d.set(e.at("row").get<int>(), e.at("col").get<int>(),
                  parse_poly(e.at("poly").get<std::string>(), nx, 0));
        diffs.push_back(std::move(d));
    }
    return Complex(std::move(terms), std::move(diffs), nx);
}

}  // namespace mhess
