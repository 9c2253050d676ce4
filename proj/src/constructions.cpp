#include "prelie/constructions.hpp"

#include "prelie/error.hpp"
#include "prelie/linalg.hpp"

#include <functional>

namespace prelie {

namespace {

std::string pair_label(std::size_t i, std::size_t j)
{
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

/// First basis pair (i, j) with a nonzero residual.
Verdict check_pairs(std::size_t d, const std::string& reason,
                    const std::function<Vec(std::size_t, std::size_t)>& residual)
{
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec diff = residual(i, j);
            if (!is_zero(diff))
                return Verdict::fail(reason, {i, j}, std::move(diff));
        }
    return Verdict::ok();
}

/// Column-by-column comparison of two equally shaped matrices.
Verdict check_equal(const Mat& lhs, const Mat& rhs, const std::string& reason)
{
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw Error(ErrorKind::ShapeMismatch, reason);
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
        Vec diff = lhs.col(c) - rhs.col(c);
        if (!is_zero(diff))
            return Verdict::fail(reason, {c}, std::move(diff));
    }
    return Verdict::ok();
}

void require_square(const Mat& m, std::size_t d, const char* what)
{
    if (m.rows() != d || m.cols() != d)
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + " must be " + std::to_string(d) + "x" +
                                                  std::to_string(d));
}

void require_rep_of(const Algebra& a, const Representation& rep)
{
    if (rep.algebra.product() != a.product())
        throw Error(ErrorKind::AlgebraMismatch, "representation belongs to a different algebra");
}

void require_o_shape(const Algebra& a, const Representation& rep, const Mat& T)
{
    require_rep_of(a, rep);
    if (T.rows() != a.dim() || T.cols() != rep.space_dim)
        throw Error(ErrorKind::ShapeMismatch, "O-operator must be dim(g) x dim(V)");
}

StructureTensor tensor_from(std::size_t d, const std::function<Vec(std::size_t, std::size_t)>& product)
{
    StructureTensor t(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            t.set_basis_product(i, j, product(i, j));
    return t;
}

/// rho(Tu)v + mu(Tv)u on basis vectors of V.
Vec o_term(const Representation& rep, const Mat& T, std::size_t u, std::size_t v)
{
    return rep.rho_of(T.col(u)).col(v) + rep.mu_of(T.col(v)).col(u);
}

}  // namespace

bool all_pass(const std::vector<Certificate>& certs)
{
    for (const auto& c : certs)
        if (!c.verdict)
            return false;
    return true;
}

Verdict check_derivation(const Algebra& a, const Mat& D)
{
    require_square(D, a.dim(), "derivation");
    return check_pairs(a.dim(), "D(x.y) != D(x).y + x.D(y)", [&](std::size_t i, std::size_t j) {
        return D * a.basis_product(i, j) - a.mul(D.col(i), unit_vec(a.dim(), j)) -
               a.mul(unit_vec(a.dim(), i), D.col(j));
    });
}

Algebra derivation_to_prelie(const Algebra& a, const Mat& D)
{
    const Verdict ca = check_comm_assoc(a.product());
    if (!ca)
        throw Error(ErrorKind::NotCommAssoc, ca.reason);
    const Verdict v = check_derivation(a, D);
    if (!v)
        throw Error(ErrorKind::NotDerivation, "Leibniz rule fails at " + pair_label(v.at[0], v.at[1]));
    const std::size_t d = a.dim();
    return Algebra(tensor_from(d, [&](std::size_t i, std::size_t j) { return a.mul(unit_vec(d, i), D.col(j)); }),
                   Flavor::PreLie, a.basis());
}

Verdict check_symplectic_cocycle(const SymplecticForm& s)
{
    const std::size_t d = s.lie_algebra.dim();
    const auto& br = s.lie_algebra.product();
    auto w = [&](const Vec& x, std::size_t k) {
        Scalar acc;
        for (std::size_t a = 0; a < d; ++a)
            if (x[a] != 0)
                acc += x[a] * s.omega(a, k);
        return acc;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar v = w(br.basis_product(i, j), k) + w(br.basis_product(k, i), j) + w(br.basis_product(j, k), i);
                if (v != 0)
                    return Verdict::fail("omega([x,y],z) + cyclic != 0", {i, j, k}, {v});
            }
    return Verdict::ok();
}

Algebra symplectic_to_prelie(const SymplecticForm& s)
{
    const std::size_t d = s.lie_algebra.dim();
    require_square(s.omega, d, "omega");
    const Verdict lie = check_jacobi(s.lie_algebra.product());
    if (!lie)
        throw Error(ErrorKind::NotLie, lie.reason);
    if (!s.omega.is_antisymmetric())
        throw Error(ErrorKind::NotAntisymmetric, "omega^T != -omega");
    if (rank(s.omega) != d)
        throw Error(ErrorKind::Degenerate, "omega is singular");
    const Verdict cocycle = check_symplectic_cocycle(s);
    if (!cocycle)
        throw Error(ErrorKind::NotCocycle, "2-cocycle identity fails at (" + std::to_string(cocycle.at[0] + 1) + "," +
                                               std::to_string(cocycle.at[1] + 1) + "," +
                                               std::to_string(cocycle.at[2] + 1) + ")");

    // omega(e_i.e_j, e_k) = (omega^T u)_k for u = e_i.e_j.
    const Mat solver = invert(s.omega.transpose());
    const auto& br = s.lie_algebra.product();
    StructureTensor t = tensor_from(d, [&](std::size_t i, std::size_t j) {
        Vec rhs(d);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t b = 0; b < d; ++b)
                if (br.at(i, k, b) != 0)
                    rhs[k] -= br.at(i, k, b) * s.omega(j, b);
        return solver * rhs;
    });
    return Algebra(std::move(t), Flavor::PreLie, s.lie_algebra.basis());
}

Verdict check_rota_baxter(const Algebra& a, const Mat& R, const Scalar& lambda)
{
    require_square(R, a.dim(), "Rota-Baxter operator");
    const std::size_t d = a.dim();
    return check_pairs(d, "R(x).R(y) != R(R(x).y + x.R(y) + lambda x.y)", [&](std::size_t i, std::size_t j) {
        const Vec ei = unit_vec(d, i), ej = unit_vec(d, j);
        Vec inner = a.mul(R.col(i), ej) + a.mul(ei, R.col(j));
        axpy(inner, lambda, a.basis_product(i, j));
        return a.mul(R.col(i), R.col(j)) - R * inner;
    });
}

StructureTensor rota_baxter_product(const Algebra& a, const Mat& R, const Scalar& lambda)
{
    require_square(R, a.dim(), "Rota-Baxter operator");
    const std::size_t d = a.dim();
    return tensor_from(d, [&](std::size_t i, std::size_t j) {
        Vec out = a.mul(R.col(i), unit_vec(d, j)) + a.mul(unit_vec(d, i), R.col(j));
        axpy(out, lambda, a.basis_product(i, j));
        return out;
    });
}

MorphismTriple rota_baxter_triple(const Algebra& a, const Mat& R, const Scalar& lambda)
{
    const Verdict v = check_rota_baxter(a, R, lambda);
    if (!v)
        throw Error(ErrorKind::NotRotaBaxter, "identity fails at " + pair_label(v.at[0], v.at[1]));
    return MorphismTriple(Algebra(rota_baxter_product(a, R, lambda), Flavor::PreLie), a, R);
}

Verdict check_nijenhuis(const Algebra& a, const Mat& N)
{
    require_square(N, a.dim(), "Nijenhuis operator");
    const std::size_t d = a.dim();
    return check_pairs(d, "N(x).N(y) != N(N(x).y + x.N(y) - N(x.y))", [&](std::size_t i, std::size_t j) {
        const Vec inner = a.mul(N.col(i), unit_vec(d, j)) + a.mul(unit_vec(d, i), N.col(j)) -
                          N * a.basis_product(i, j);
        return a.mul(N.col(i), N.col(j)) - N * inner;
    });
}

StructureTensor nijenhuis_product(const Algebra& a, const Mat& N)
{
    require_square(N, a.dim(), "Nijenhuis operator");
    const std::size_t d = a.dim();
    return tensor_from(d, [&](std::size_t i, std::size_t j) {
        return a.mul(N.col(i), unit_vec(d, j)) + a.mul(unit_vec(d, i), N.col(j)) - N * a.basis_product(i, j);
    });
}

MorphismTriple nijenhuis_triple(const Algebra& a, const Mat& N)
{
    const Verdict v = check_nijenhuis(a, N);
    if (!v)
        throw Error(ErrorKind::NotNijenhuis, "identity fails at " + pair_label(v.at[0], v.at[1]));
    return MorphismTriple(Algebra(nijenhuis_product(a, N), Flavor::PreLie), a, N);
}

Verdict check_o_operator(const Algebra& a, const Representation& rep, const Mat& T)
{
    require_o_shape(a, rep, T);
    return check_pairs(rep.space_dim, "T(u).T(v) != T(rho(Tu)v + mu(Tv)u)", [&](std::size_t u, std::size_t v) {
        return a.mul(T.col(u), T.col(v)) - T * o_term(rep, T, u, v);
    });
}

StructureTensor o_operator_product(const Representation& rep, const Mat& T)
{
    if (T.cols() != rep.space_dim || T.rows() != rep.algebra.dim())
        throw Error(ErrorKind::ShapeMismatch, "O-operator must be dim(g) x dim(V)");
    return tensor_from(rep.space_dim, [&](std::size_t u, std::size_t v) { return o_term(rep, T, u, v); });
}

MorphismTriple o_operator_triple(const Algebra& a, const Representation& rep, const Mat& T)
{
    const Verdict v = check_o_operator(a, rep, T);
    if (!v)
        throw Error(ErrorKind::NotOOperator, "identity fails at " + pair_label(v.at[0], v.at[1]));
    return MorphismTriple(Algebra(o_operator_product(rep, T), Flavor::PreLie), a, T);
}

Verdict check_rr_bracket(const SMatrixCandidate& c)
{
    const Algebra& a = c.algebra;
    const std::size_t d = a.dim();
    require_square(c.r, d, "r");
    const StructureTensor bracket = a.product().commutator();
    std::vector<Vec> rs(d);
    for (std::size_t i = 0; i < d; ++i)
        rs[i] = c.r.col(i);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                const Scalar v = -a.mul(rs[y], rs[z])[x] + a.mul(rs[x], rs[z])[y] + bracket.apply(rs[x], rs[y])[z];
                if (v != 0)
                    return Verdict::fail("[[r,r]] != 0", {x, y, z}, {v});
            }
    return Verdict::ok();
}

Verdict check_s_matrix(const SMatrixCandidate& c)
{
    require_square(c.r, c.algebra.dim(), "r");
    if (!c.r.is_symmetric())
        throw Error(ErrorKind::NotSymmetric, "r must be symmetric");
    const Verdict direct = check_rr_bracket(c);
    const Verdict via_o = check_o_operator(c.algebra, coregular_rep(c.algebra), c.r);
    if (direct.pass != via_o.pass)
        throw Error(ErrorKind::CrossCheckMismatch, "[[r,r]] and coregular O-operator test disagree");
    return direct;
}

MorphismTriple s_matrix_triple(const SMatrixCandidate& c)
{
    const Verdict v = check_s_matrix(c);
    if (!v)
        throw Error(ErrorKind::NotSMatrix, "[[r,r]] nonzero at (" + std::to_string(v.at[0] + 1) + "," +
                                               std::to_string(v.at[1] + 1) + "," + std::to_string(v.at[2] + 1) + ")");
    return o_operator_triple(c.algebra, coregular_rep(c.algebra), c.r);
}

Verdict check_compatible_o(const Algebra& a, const Representation& rep, const Mat& T1, const Mat& T2)
{
    for (const Mat* T : {&T1, &T2}) {
        const Verdict v = check_o_operator(a, rep, *T);
        if (!v)
            throw Error(ErrorKind::NotOOperator, std::string(T == &T1 ? "T1" : "T2") + " fails at " +
                                                     pair_label(v.at[0], v.at[1]));
    }
    return check_pairs(rep.space_dim, "O-operator cross-condition", [&](std::size_t u, std::size_t v) {
        return T1 * o_term(rep, T2, u, v) + T2 * o_term(rep, T1, u, v) - a.mul(T1.col(u), T2.col(v)) -
               a.mul(T2.col(u), T1.col(v));
    });
}

NijenhuisPairConstruction nijenhuis_pair_from_compatible(const Algebra& a, const Representation& rep, const Mat& T1,
                                                         const Mat& T2)
{
    const Verdict compat = check_compatible_o(a, rep, T1, T2);
    if (!compat)
        throw Error(ErrorKind::NotCompatible, "cross-condition fails at " + pair_label(compat.at[0], compat.at[1]));
    if (!T2.is_square() || rank(T2) != T2.rows())
        throw Error(ErrorKind::SingularT2, "T2 is not invertible");
    const Mat T2inv = invert(T2);

    NijenhuisPairConstruction out;
    out.N = T1 * T2inv;
    out.S = T2inv * T1;
    const Algebra v1(o_operator_product(rep, T1), Flavor::Unchecked);
    const Algebra v2(o_operator_product(rep, T2), Flavor::Unchecked);
    const Mat NN = out.N * out.N;
    auto& c = out.certificates;
    c.push_back({"N Nijenhuis on g", check_nijenhuis(a, out.N)});
    c.push_back({"S Nijenhuis on V^T1", check_nijenhuis(v1, out.S)});
    c.push_back({"S Nijenhuis on V^T2", check_nijenhuis(v2, out.S)});
    c.push_back({"N T1 = T1 S", check_equal(out.N * T1, T1 * out.S, "N T1 != T1 S")});
    c.push_back({"N T2 = T2 S", check_equal(out.N * T2, T2 * out.S, "N T2 != T2 S")});
    c.push_back({"pair condition on T1 triple", check_equal(out.N * T1 * out.S, NN * T1, "N T1 S != N^2 T1")});
    c.push_back({"pair condition on T2 triple", check_equal(out.N * T2 * out.S, NN * T2, "N T2 S != N^2 T2")});
    return out;
}

Algebra twisted_product(const Algebra& v_alg, const Mat& S)
{
    const Verdict v = check_nijenhuis(v_alg, S);
    if (!v)
        throw Error(ErrorKind::NotNijenhuis, "S fails at " + pair_label(v.at[0], v.at[1]));
    return Algebra(nijenhuis_product(v_alg, S), Flavor::PreLie, v_alg.basis());
}

MorphismTriple twisted_triple(const Algebra& a, const Representation& rep, const Mat& T, const Mat& N, const Mat& S)
{
    const Verdict o = check_o_operator(a, rep, T);
    if (!o)
        throw Error(ErrorKind::NotOOperator, "T fails at " + pair_label(o.at[0], o.at[1]));
    const Algebra v_alg(o_operator_product(rep, T), Flavor::PreLie);
    const Verdict n = check_nijenhuis(a, N);
    if (!n)
        throw Error(ErrorKind::NotNijenhuis, "N fails at " + pair_label(n.at[0], n.at[1]));
    return MorphismTriple(twisted_product(v_alg, S), Algebra(nijenhuis_product(a, N), Flavor::PreLie, a.basis()), T);
}

}  // namespace prelie
