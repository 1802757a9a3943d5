#include "torfacet/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace torfacet {

Coefficients Coefficients::fp(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("Coefficients: " + std::to_string(p) + " is not prime");
    return {Kind::PrimeField, p};
}

Coefficients Coefficients::parse(const std::string& spec) {
    if (spec == "q" || spec == "Q") return q();
    if (spec == "z" || spec == "Z") return z();
    if (spec.rfind("fp:", 0) == 0) return fp(std::stoll(spec.substr(3)));
    throw std::invalid_argument("Coefficients: cannot parse '" + spec + "' (expected q | z | fp:<p>)");
}

std::string Coefficients::str() const {
    switch (kind) {
        case Kind::Rationals: return "q";
        case Kind::Integers: return "z";
        case Kind::PrimeField: return "fp:" + std::to_string(p);
    }
    return "?";
}

std::vector<long long> normalize_torsion(const std::vector<Int>& divisors) {
    std::vector<long long> out;
    for (Int d : divisors) {
        if (d <= 1) continue;
        for (long long q = 2; Int(q) * q <= d; ++q) {
            if (d % q != 0) continue;
            long long power = 1;
            while (d % q == 0) {
                power *= q;
                d /= q;
            }
            out.push_back(power);
        }
        if (d > 1) out.push_back(d.convert_to<long long>());
    }
    std::sort(out.begin(), out.end());
    return out;
}

MatrixRankData matrix_rank_data(const SignMatrix& M, const Coefficients& coeff) {
    MatrixRankData out;
    switch (coeff.kind) {
        case Coefficients::Kind::Rationals:
            out.rank = rank_over_q(M);
            break;
        case Coefficients::Kind::PrimeField:
            out.rank = rank_over_fp(M, coeff.p);
            break;
        case Coefficients::Kind::Integers: {
            SNFResult snf = smith_normal_form(M);
            out.rank = snf.rank();
            out.divisors = snf.nontrivial_divisors();
            break;
        }
    }
    return out;
}

std::map<int, HomologyGroup> cohomology_groups(const GradedComplex& C, const Coefficients& coeff) {
    std::map<int, HomologyGroup> out;
    long n = static_cast<long>(C.dims.size());
    std::vector<MatrixRankData> rd(C.d.size());
    for (std::size_t k = 0; k < C.d.size(); ++k) rd[k] = matrix_rank_data(C.d[k], coeff);
    for (long k = 0; k < n; ++k) {
        long out_rank = k < static_cast<long>(C.d.size()) ? rd[k].rank : 0;
        long in_rank = k > 0 ? rd[k - 1].rank : 0;
        HomologyGroup g;
        g.rank = C.dims[k] - out_rank - in_rank;
        if (coeff.kind == Coefficients::Kind::Integers && k > 0)
            g.torsion = normalize_torsion(rd[k - 1].divisors);
        if (!g.trivial()) out[C.lo + k] = g;
    }
    return out;
}

ReducedChainData reduced_chain_data(const SimplicialComplex& K) {
    ReducedChainData data;
    auto faces = K.all_faces();
    int top = K.dim() + 1;  // max face size
    data.bases.resize(top + 1);
    for (Subset f : faces) data.bases[f.size()].push_back(f);

    std::vector<std::unordered_map<std::uint32_t, long>> index(top + 1);
    for (int k = 0; k <= top; ++k)
        for (std::size_t i = 0; i < data.bases[k].size(); ++i)
            index[k][data.bases[k][i].bits()] = static_cast<long>(i);

    data.boundary.resize(top);
    for (int k = 1; k <= top; ++k) {
        SignMatrix& M = data.boundary[k - 1];
        M.rows = static_cast<long>(data.bases[k - 1].size());
        M.cols = static_cast<long>(data.bases[k].size());
        for (std::size_t j = 0; j < data.bases[k].size(); ++j) {
            Subset sigma = data.bases[k][j];
            int pos = 0;
            for (int v : sigma.vertices()) {
                Subset tau = sigma.without(v);
                M.add(index[k - 1].at(tau.bits()), static_cast<long>(j), (pos % 2 == 0) ? 1 : -1);
                ++pos;
            }
        }
    }
    return data;
}

std::map<int, HomologyGroup> reduced_homology(const SimplicialComplex& K, const Coefficients& coeff) {
    ReducedChainData data = reduced_chain_data(K);
    int top = static_cast<int>(data.bases.size()) - 1;
    // H̃_{k-1} = ker ∂_k / im ∂_{k+1}; torsion comes from the incoming ∂_{k+1}
    std::map<int, HomologyGroup> out;
    std::vector<MatrixRankData> rd(data.boundary.size());
    for (std::size_t k = 0; k < data.boundary.size(); ++k)
        rd[k] = matrix_rank_data(data.boundary[k], coeff);
    for (int k = 0; k <= top; ++k) {
        long out_rank = k >= 1 ? rd[k - 1].rank : 0;      // ∂_k : C_k -> C_{k-1}
        long in_rank = k < top ? rd[k].rank : 0;          // ∂_{k+1}
        HomologyGroup g;
        g.rank = static_cast<long>(data.bases[k].size()) - out_rank - in_rank;
        if (coeff.kind == Coefficients::Kind::Integers && k < top)
            g.torsion = normalize_torsion(rd[k].divisors);
        if (!g.trivial()) out[k - 1] = g;  // face size k <-> reduced degree k-1
    }
    return out;
}

std::map<int, HomologyGroup> reduced_cohomology(const SimplicialComplex& K, const Coefficients& coeff) {
    ReducedChainData data = reduced_chain_data(K);
    int top = static_cast<int>(data.bases.size()) - 1;
    GradedComplex C;
    C.lo = -1;
    for (int k = 0; k <= top; ++k) C.dims.push_back(static_cast<long>(data.bases[k].size()));
    for (int k = 1; k <= top; ++k) {
        // δ on size-(k-1) cochains is the transpose of ∂ on size-k faces
        SignMatrix t;
        t.rows = data.boundary[k - 1].cols;
        t.cols = data.boundary[k - 1].rows;
        for (auto& e : data.boundary[k - 1].entries) t.add(e.col, e.row, e.sign);
        C.d.push_back(std::move(t));
    }
    return cohomology_groups(C, coeff);
}

}  // namespace torfacet
