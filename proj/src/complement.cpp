#include "toric/complement.hpp"

#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

bool coset_equal(const CosetFunctional& a, const CosetFunctional& b, const ConeData& sigma) {
    LinearForm diff = a.rep - b.rep;
    for (const auto& g : sigma.gens())
        if (diff.pair(g) != 0) return false;
    return true;
}

std::vector<LinearForm> ComplementMap::section_matrix(const std::vector<IntVec>& basis) const {
    int n = rank();
    int k = static_cast<int>(basis.size());
    std::vector<LinearForm> out;
    if (k == 0) return out;
    RatMat rows(k, RatVec(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = Rat(basis[i][j]);
    if (rank_rat(rows) != k)
        throw std::invalid_argument("section_matrix: basis is not independent");
    ConeData span(n, basis);
    for (int i = 0; i < k; ++i) {
        RatVec e(k, 0);
        e[i] = 1;
        auto rep = solve_rat(rows, e);
        if (!rep) throw std::logic_error("section_matrix: unsolvable dual system");
        out.push_back(section(span, CosetFunctional{LinearForm(*rep)}));
    }
    return out;
}

namespace {

// Maximal independent subset of the generators, in order.
std::vector<IntVec> independent_gens(const ConeData& sigma) {
    std::vector<IntVec> out;
    IntMat rows;
    for (const auto& g : sigma.gens()) {
        rows.push_back(g);
        if (rank_int(rows) == static_cast<int>(out.size()) + 1)
            out.push_back(g);
        else
            rows.pop_back();
    }
    return out;
}

}  // namespace

InnerProductMap::InnerProductMap(RatMat gram) : gram_(std::move(gram)) {
    size_t n = gram_.size();
    if (n == 0) throw SchemaError("inner product: empty Gram matrix");
    for (const auto& row : gram_)
        if (row.size() != n) throw SchemaError("inner product: Gram matrix not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw SchemaError("inner product: Gram matrix not symmetric");
    // Positive definiteness via leading principal minors.
    for (size_t k = 1; k <= n; ++k) {
        RatMat lead(k, RatVec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead[i][j] = gram_[i][j];
        if (det_rat(lead) <= 0)
            throw SchemaError("inner product: Gram matrix not positive definite");
    }
}

InnerProductMap InnerProductMap::standard(int n) { return InnerProductMap(identity_rat(n)); }

bool InnerProductMap::is_generic(const ConeData& sigma) const {
    return sigma.rank() == rank();
}

LinearForm InnerProductMap::section(const ConeData& sigma, const CosetFunctional& f) const {
    int n = rank();
    if (sigma.rank() != n)
        throw GenericityError("section: cone rank does not match the complement map");
    std::vector<IntVec> basis = independent_gens(sigma);
    int k = static_cast<int>(basis.size());
    if (k == 0) return LinearForm(RatVec(n, 0));
    // Solve (B^T G B) c = f(B); the section is G B c.
    RatMat gb(n, RatVec(k));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) {
            Rat s = 0;
            for (int l = 0; l < n; ++l) s += gram_[i][l] * Rat(basis[j][l]);
            gb[i][j] = s;
        }
    RatMat sys(k, RatVec(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat s = 0;
            for (int l = 0; l < n; ++l) s += Rat(basis[i][l]) * gb[l][j];
            sys[i][j] = s;
        }
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) rhs[i] = f.rep.pair(basis[i]);
    auto c = solve_rat(sys, rhs);
    if (!c) throw GenericityError("section: singular Gram system");
    RatVec m(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) m[i] += gb[i][j] * (*c)[j];
    return LinearForm(m);
}

std::vector<LinearForm> InnerProductMap::psi_subspace(const ConeData& sigma) const {
    int n = rank();
    if (sigma.rank() != n)
        throw GenericityError("psi_subspace: cone rank does not match the complement map");
    std::vector<LinearForm> out;
    for (const auto& g : independent_gens(sigma)) {
        RatVec m(n, 0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) m[i] += gram_[i][l] * Rat(g[l]);
        out.push_back(LinearForm(m));
    }
    return out;
}

std::unique_ptr<ComplementMap> InnerProductMap::induced(const std::vector<IntVec>& basis) const {
    int n = rank();
    int k = static_cast<int>(basis.size());
    RatMat sub(k, RatVec(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat s = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) s += Rat(basis[i][a]) * gram_[a][b] * Rat(basis[j][b]);
            sub[i][j] = s;
        }
    return std::make_unique<InnerProductMap>(std::move(sub));
}

std::string InnerProductMap::cache_key() const {
    std::ostringstream os;
    os << "ip:";
    for (const auto& row : gram_) {
        for (const auto& c : row) os << rat_to_string(c) << ",";
        os << ";";
    }
    return os.str();
}

}  // namespace toric
