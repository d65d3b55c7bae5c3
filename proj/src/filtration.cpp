#include "stargate/filtration.hpp"

#include <algorithm>

#include "stargate/error.hpp"

namespace stargate {

NilpotentOperator::NilpotentOperator(RatMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) throw argument_error("operator matrix must be square");
    std::size_t mu = matrix_.rows();
    RatMatrix power = RatMatrix::identity(mu);
    for (unsigned d = 0; d <= mu; ++d) {
        if (power.is_zero()) {
            nilpotency_degree_ = d;
            return;
        }
        power = power * matrix_;
    }
    throw argument_error("matrix is not nilpotent");
}

unsigned FiltrationProfile::total() const {
    unsigned t = 0;
    for (unsigned h : dims) t += h;
    return t;
}

unsigned FiltrationProfile::max_dim() const {
    return dims.empty() ? 0 : *std::max_element(dims.begin(), dims.end());
}

unsigned FiltrationProfile::block_count(unsigned k) const {
    if (k == 0) throw argument_error("block sizes start at 1");
    auto h = [&](long i) -> long {
        if (i < 0 || i >= static_cast<long>(dims.size())) return 0;
        return static_cast<long>(dims[static_cast<std::size_t>(i)]);
    };
    long n = static_cast<long>(center);
    long b = h(n + static_cast<long>(k) - 1) - h(n + static_cast<long>(k) + 1);
    if (b < 0) throw argument_error("negative block count, profile is not realizable");
    return static_cast<unsigned>(b);
}

void validate_profile(const FiltrationProfile& profile) {
    if (profile.dims.size() != 2 * static_cast<std::size_t>(profile.center) + 1)
        throw argument_error("profile must list dims h_0..h_{2n}");
    std::size_t n = profile.center;
    for (std::size_t i = 1; i <= n; ++i)
        if (profile.dims[n + i] != profile.dims[n - i])
            throw argument_error("profile must be symmetric about the center");
    for (unsigned k = 1; k <= n + 1; ++k) profile.block_count(k);
}

WeightFiltration weight_filtration(const NilpotentOperator& op, unsigned center) {
    if (op.nilpotency_degree() > center + 1)
        throw precondition_error("nilpotency degree exceeds center + 1");
    std::size_t mu = op.size();
    long n = static_cast<long>(center);
    unsigned deg = op.nilpotency_degree();

    std::vector<RatMatrix> powers;
    powers.push_back(RatMatrix::identity(mu));
    for (unsigned d = 1; d <= deg; ++d) powers.push_back(powers.back() * op.matrix());
    auto power_of = [&](unsigned e) -> const RatMatrix& {
        return powers[std::min<unsigned>(e, deg)];
    };

    WeightFiltration wf;
    wf.center = center;
    for (long i = -n; i <= n; ++i) {
        Subspace w(mu);
        for (unsigned j = static_cast<unsigned>(std::max(-i, 0L)); j <= deg; ++j) {
            unsigned e = static_cast<unsigned>(i + static_cast<long>(j)) + 1;
            Subspace term = Subspace::kernel_of(power_of(e)).intersect(Subspace::image_of(power_of(j)));
            w = w.sum(term);
        }
        wf.subspaces.push_back(std::move(w));
    }

    if (wf.subspaces.back().dim() != mu)
        throw internal_error("top filtration step is not the full space");
    wf.profile.center = center;
    for (std::size_t i = 0; i < wf.subspaces.size(); ++i) {
        std::size_t lower = i == 0 ? 0 : wf.subspaces[i - 1].dim();
        if (!(i == 0) && !wf.subspaces[i].contains(wf.subspaces[i - 1]))
            throw internal_error("filtration is not ascending");
        wf.profile.dims.push_back(static_cast<unsigned>(wf.subspaces[i].dim() - lower));
    }

    // first axiom: N W_i <= W_{i-2}
    for (std::size_t i = 0; i < wf.subspaces.size(); ++i) {
        Subspace image = wf.subspaces[i].apply(op.matrix());
        if (i < 2) {
            if (image.dim() != 0) throw internal_error("N does not kill W_0 and W_1");
        } else if (!wf.subspaces[i - 2].contains(image)) {
            throw internal_error("N does not lower the weight by two");
        }
    }
    // second axiom: N^i induces gr_{n+i} ~ gr_{n-i}
    for (long i = 1; i <= n; ++i) {
        if (wf.profile.dims[static_cast<std::size_t>(n + i)] !=
            wf.profile.dims[static_cast<std::size_t>(n - i)])
            throw internal_error("graded dimensions are not symmetric");
        Subspace pushed = wf.subspaces[static_cast<std::size_t>(n + i)].apply(
            power_of(static_cast<unsigned>(i)));
        Subspace below = n - i > 0 ? wf.subspaces[static_cast<std::size_t>(n - i - 1)] : Subspace(mu);
        if (pushed.sum(below) != wf.subspaces[static_cast<std::size_t>(n - i)])
            throw internal_error("N^i is not surjective onto gr_{n-i}");
    }
    validate_profile(wf.profile);
    return wf;
}

bool profile_invariance_check(const NilpotentOperator& op, const RatMatrix& p,
                              const Rational& a, unsigned center) {
    if (a == 0) throw argument_error("scale factor must be nonzero");
    RatMatrix conjugated = p * op.matrix().scaled(a) * p.inverse();
    FiltrationProfile base = weight_filtration(op, center).profile;
    FiltrationProfile other = weight_filtration(NilpotentOperator(conjugated), center).profile;
    return base == other;
}

NilpotentReduction nilpotent_reduce(const NilpotentOperator& op) {
    std::size_t mu = op.size();
    const RatMatrix& n = op.matrix();
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (n.at(i, j) != 0) throw precondition_error("matrix must be strictly upper triangular");

    NilpotentReduction out{RatMatrix::identity(mu), RatMatrix::identity(mu), n};
    RatMatrix& m = out.reduced;
    // pivot_col[i] = column of the single nonzero entry in pivot row i
    std::vector<std::size_t> pivot_col(mu, mu);

    auto row_op = [&](std::size_t target, std::size_t source, const Rational& c) {
        for (std::size_t k = 0; k < mu; ++k) {
            m.at(target, k) -= c * m.at(source, k);
            out.q_left.at(target, k) -= c * out.q_left.at(source, k);
        }
    };
    auto col_op = [&](std::size_t target, std::size_t source, const Rational& c) {
        for (std::size_t k = 0; k < mu; ++k) {
            m.at(k, target) -= c * m.at(k, source);
            out.q_right.at(k, target) -= c * out.q_right.at(k, source);
        }
    };

    for (std::size_t j = 0; j < mu; ++j) {
        // entries in already-pivoted rows are removed with the pivot column
        for (std::size_t i = 0; i < j; ++i)
            if (pivot_col[i] != mu && m.at(i, j) != 0)
                col_op(j, pivot_col[i], m.at(i, j) / m.at(i, pivot_col[i]));
        std::size_t pivot = mu;
        for (std::size_t i = 0; i < j; ++i)
            if (m.at(i, j) != 0) pivot = i;
        if (pivot == mu) continue;
        for (std::size_t i = 0; i < pivot; ++i)
            if (m.at(i, j) != 0) row_op(i, pivot, m.at(i, j) / m.at(pivot, j));
        pivot_col[pivot] = j;
    }

    if (!(out.q_left * n * out.q_right == m))
        throw internal_error("reduction does not recompose");
    return out;
}

TorusBoundResult torus_bound_check(const NilpotentOperator& op) {
    std::size_t mu = op.size();
    if (mu > 8) throw precondition_error("size cap 8 exceeded");
    std::size_t rank = op.matrix().rank();

    // Jordan type from power ranks; torus dimension is the block count.
    std::vector<std::size_t> power_rank;
    RatMatrix power = RatMatrix::identity(mu);
    while (!power.is_zero()) {
        power_rank.push_back(power.rank());
        power = power * op.matrix();
    }
    power_rank.push_back(0);
    std::vector<std::size_t> blocks_of_min_size; // count of blocks of size >= k
    for (std::size_t k = 1; k + 1 <= power_rank.size(); ++k)
        blocks_of_min_size.push_back(power_rank[k - 1] - power_rank[k]);

    // cross-check against the commutant, dim = sum over block pairs of min size
    RatMatrix commutator(mu * mu, mu * mu);
    for (std::size_t r = 0; r < mu; ++r)
        for (std::size_t c = 0; c < mu; ++c)
            for (std::size_t k = 0; k < mu; ++k) {
                commutator.at(r * mu + c, k * mu + c) += op.matrix().at(r, k);
                commutator.at(r * mu + c, r * mu + k) -= op.matrix().at(k, c);
            }
    std::size_t commutant_dim = commutator.kernel_basis().size();
    std::size_t expected = 0;
    for (std::size_t a = 0; a < blocks_of_min_size.size(); ++a)
        for (std::size_t b = 0; b < blocks_of_min_size.size(); ++b)
            expected += std::min(a + 1, b + 1) *
                        (blocks_of_min_size[a] - (a + 1 < blocks_of_min_size.size() ? blocks_of_min_size[a + 1] : 0)) *
                        (blocks_of_min_size[b] - (b + 1 < blocks_of_min_size.size() ? blocks_of_min_size[b + 1] : 0));
    if (commutant_dim != expected)
        throw internal_error("commutant dimension disagrees with the Jordan type");

    TorusBoundResult res;
    res.bound = mu - rank;
    res.centralizer_torus_dim = blocks_of_min_size.empty() ? 0 : blocks_of_min_size[0];
    res.ok = res.centralizer_torus_dim <= res.bound;
    return res;
}

unsigned dim_im_from_profile(const FiltrationProfile& profile) {
    validate_profile(profile);
    std::size_t n = profile.center;
    unsigned h_next = n + 1 < profile.dims.size() ? profile.dims[n + 1] : 0;
    return profile.total() - profile.dims[n] - h_next;
}

} // namespace stargate
