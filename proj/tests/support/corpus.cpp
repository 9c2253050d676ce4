#include "corpus.hpp"

#include "prelie/linalg.hpp"

#include <stdexcept>

namespace corpus {

using namespace prelie;

Scalar random_scalar(Rng& rng, int height)
{
    std::uniform_int_distribution<int> num(-height, height);
    std::uniform_int_distribution<int> den(1, height);
    return Scalar(num(rng), den(rng));
}

Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols, int height, double density)
{
    std::bernoulli_distribution keep(density);
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng)) {
                m(r, c) = random_scalar(rng, height);
                m(r, c).canonicalize();
            }
    return m;
}

Mat random_symmetric(Rng& rng, std::size_t d, int height, double density)
{
    Mat m = random_mat(rng, d, d, height, density);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < r; ++c)
            m(r, c) = m(c, r);
    return m;
}

StructureTensor random_tensor(Rng& rng, std::size_t dim, int height, std::size_t nonzeros)
{
    std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
    StructureTensor t(dim);
    for (std::size_t n = 0; n < nonzeros; ++n) {
        Scalar s = random_scalar(rng, height);
        s.canonicalize();
        t.at(idx(rng), idx(rng), idx(rng)) = s;
    }
    return t;
}

Algebra random_prelie(Rng& rng, std::size_t dim, int height)
{
    std::uniform_int_distribution<std::size_t> count(1, dim + 2);
    for (int attempt = 0; attempt < 2'000'000; ++attempt) {
        StructureTensor t = random_tensor(rng, dim, height, count(rng));
        if (!t.is_zero() && !t.commutator().is_zero() && check_pre_lie(t))
            return Algebra(std::move(t), Flavor::PreLie);
    }
    throw std::runtime_error("random_prelie: no sample found");
}

Algebra abelian(std::size_t dim) { return Algebra::abelian(dim); }

Algebra two_dim_nonabelian()
{
    StructureTensor t(2);
    t.at(0, 1, 0) = 1;
    t.at(1, 1, 1) = 1;
    return Algebra(std::move(t), Flavor::PreLie);
}

Algebra square_to_e1()
{
    StructureTensor t(2);
    t.at(1, 1, 0) = 1;
    return Algebra(std::move(t), Flavor::PreLie);
}

Algebra idempotent_line()
{
    StructureTensor t(1);
    t.at(0, 0, 0) = 1;
    return Algebra(std::move(t), Flavor::PreLie);
}

Algebra dual_numbers()
{
    StructureTensor t(2);
    t.at(0, 0, 0) = 1;
    t.at(0, 1, 1) = 1;
    t.at(1, 0, 1) = 1;
    return Algebra(std::move(t), Flavor::CommAssoc, {"1", "x"});
}

Mat d_dx() { return Mat{{0, 1}, {0, 0}}; }

Mat x_ddx() { return Mat{{0, 0}, {0, 1}}; }

SymplecticForm symplectic_fixture()
{
    StructureTensor t(2);
    t.at(0, 1, 0) = 1;
    t.at(1, 0, 0) = -1;
    return {Algebra(std::move(t), Flavor::Lie), Mat{{0, 1}, {-1, 0}}};
}

std::vector<Algebra> prelie_corpus(Rng& rng, std::size_t randoms)
{
    std::vector<Algebra> out{abelian(2), idempotent_line(), square_to_e1(), two_dim_nonabelian(),
                             derivation_to_prelie(dual_numbers(), x_ddx()),
                             symplectic_to_prelie(symplectic_fixture())};
    for (std::size_t i = 0; i < randoms; ++i)
        out.push_back(random_prelie(rng, i % 2 == 0 ? 3 : 2));
    return out;
}

std::vector<Mat> all_matrices(std::size_t rows, std::size_t cols, const std::vector<long>& values)
{
    const std::size_t n = rows * cols;
    std::vector<Mat> out;
    std::vector<std::size_t> digits(n, 0);
    while (true) {
        Mat m(rows, cols);
        for (std::size_t k = 0; k < n; ++k)
            m(k / cols, k % cols) = values[digits[k]];
        out.push_back(std::move(m));
        std::size_t k = 0;
        while (k < n && ++digits[k] == values.size())
            digits[k++] = 0;
        if (k == n)
            break;
    }
    return out;
}

std::vector<Mat> all_symmetric(std::size_t d, const std::vector<long>& values)
{
    std::vector<Mat> out;
    for (const Mat& m : all_matrices(d, d, values))
        if (m.is_symmetric())
            out.push_back(m);
    return out;
}

namespace {

bool is_scalar_matrix(const Mat& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if ((r == c && m(r, c) != m(0, 0)) || (r != c && m(r, c) != 0))
                return false;
    return true;
}

/// (g; L, 0): a representation for every pre-Lie algebra.
Representation left_rep(const Algebra& a)
{
    Representation r = regular_rep(a);
    for (auto& m : r.mu)
        m = Mat(a.dim(), a.dim());
    return r;
}

}  // namespace

std::vector<Mat> nijenhuis_operators(const Algebra& a, const std::vector<long>& values)
{
    std::vector<Mat> out;
    for (const Mat& m : all_matrices(a.dim(), a.dim(), values))
        if (!is_scalar_matrix(m) && check_nijenhuis(a, m))
            out.push_back(m);
    return out;
}

std::vector<Mat> rota_baxter_operators(const Algebra& a, const Scalar& lambda, const std::vector<long>& values)
{
    std::vector<Mat> out;
    for (const Mat& m : all_matrices(a.dim(), a.dim(), values))
        if (!is_scalar_matrix(m) && check_rota_baxter(a, m, lambda))
            out.push_back(m);
    return out;
}

std::vector<Mat> o_operators(const Algebra& a, const Representation& rep, const std::vector<long>& values)
{
    std::vector<Mat> out;
    for (const Mat& m : all_matrices(a.dim(), rep.space_dim, values))
        if (!m.is_zero() && check_o_operator(a, rep, m))
            out.push_back(m);
    return out;
}

std::vector<Mat> s_matrices(const Algebra& a, const std::vector<long>& values)
{
    std::vector<Mat> out;
    for (const Mat& r : all_symmetric(a.dim(), values))
        if (!r.is_zero() && check_s_matrix({a, r}))
            out.push_back(r);
    return out;
}

std::vector<NamedTriple> triple_corpus()
{
    const Algebra A = two_dim_nonabelian();
    const Algebra B = square_to_e1();
    const std::vector<long> small{-1, 0, 1};
    std::vector<NamedTriple> out;
    out.push_back({"zero", MorphismTriple(A, B, Mat(2, 2))});
    out.push_back({"identity", MorphismTriple(A, A, Mat::identity(2))});
    out.push_back({"nijenhuis", nijenhuis_triple(A, nijenhuis_operators(A, small).front())});
    out.push_back({"rota-baxter", rota_baxter_triple(A, rota_baxter_operators(A, Scalar(1), small).front(), Scalar(1))});
    const Representation left = left_rep(A);
    out.push_back({"o-operator", o_operator_triple(A, left, o_operators(A, left, small).back())});
    out.push_back({"s-matrix", s_matrix_triple({A, s_matrices(A, small).front()})});
    return out;
}

std::vector<CompatiblePair> compatible_pairs()
{
    std::vector<CompatiblePair> out;
    const std::vector<long> small{-1, 0, 1, 2};

    // Identity is an O-operator for (g; L, 0); pair it with every compatible
    // O-operator found by the search.
    for (const Algebra& a : {two_dim_nonabelian(), square_to_e1()}) {
        const Representation left = left_rep(a);
        const Mat id = Mat::identity(a.dim());
        for (const Mat& T1 : o_operators(a, left, small))
            if (!is_scalar_matrix(T1) && check_compatible_o(a, left, T1, id))
                out.push_back({"left-rep", a, left, T1, id});
    }

    // Compatible s-matrices (coregular representation) with r2 invertible.
    for (const Algebra& a : {two_dim_nonabelian(), square_to_e1()}) {
        const Representation co = coregular_rep(a);
        const auto rs = s_matrices(a, {-1, 0, 1});
        for (const Mat& r2 : rs) {
            if (rank(r2) != a.dim())
                continue;
            for (const Mat& r1 : rs)
                if (r1 != r2 && check_compatible_o(a, co, r1, r2))
                    out.push_back({"s-matrix", a, co, r1, r2});
        }
    }
    return out;
}

std::vector<NamedPair> pair_corpus()
{
    std::vector<NamedPair> out;
    for (const auto& nt : triple_corpus()) {
        const std::size_t d = nt.triple.g().dim(), e = nt.triple.h().dim();
        out.push_back({nt.name + " (0,0)", {nt.triple, Mat(d, d), Mat(e, e)}});
        out.push_back({nt.name + " (I,I)", {nt.triple, Mat::identity(d), Mat::identity(e)}});
        out.push_back({nt.name + " (2I,2I)", {nt.triple, Scalar(2) * Mat::identity(d), Scalar(2) * Mat::identity(e)}});
        out.push_back({nt.name + " (I,0)", {nt.triple, Mat::identity(d), Mat(e, e)}});
    }
    for (const auto& cp : compatible_pairs()) {
        const NijenhuisPairConstruction c = nijenhuis_pair_from_compatible(cp.algebra, cp.rep, cp.T1, cp.T2);
        for (const Mat* T : {&cp.T1, &cp.T2}) {
            const MorphismTriple t = o_operator_triple(cp.algebra, cp.rep, *T);
            out.push_back({cp.name + (T == &cp.T1 ? " T1" : " T2"), {t, c.S, c.N}});
        }
    }
    return out;
}

}  // namespace corpus
