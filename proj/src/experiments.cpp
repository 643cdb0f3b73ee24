#include "msc/experiments.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "msc/oracle.hpp"

namespace msc {

namespace {

// Fixed seed for the random fallback of the X'' search.
constexpr std::uint64_t kWitnessSearchSeed = 0x5EED0F3A11CEULL;
constexpr int kRandomCandidates = 2000;
constexpr std::int64_t kRandomCoefficientBound = 3;

Matrix block_diag(const Scalar& corner, const Matrix& rest) {
    Matrix out(rest.rows() + 1, rest.cols() + 1, rest.field());
    out.set(0, 0, corner);
    out.set_submatrix(1, 1, rest);
    return out;
}

Matrix unflatten(const Matrix& row, std::size_t m) {
    Matrix x(m, m, row.field());
    for (std::size_t idx = 0; idx < m * m; ++idx) x.set(idx / m, idx % m, row(0, idx));
    return x;
}

// X'' (flattened row-major) with tr(X'' A''°_i) = 0 for every i.
Matrix orthogonality_constraints(const StructureMatrix& inner) {
    const std::size_t m = inner.dim();
    const StructureMatrix op = opposite(inner);
    Matrix c(m, m * m, inner.field());
    for (std::size_t i = 0; i < m; ++i) {
        const Matrix oi = block(op, i);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t s = 0; s < m; ++s) c.set(i, r * m + s, oi(s, r));
        }
    }
    return c;
}

// Small combinations of the null-space basis first, then seeded random ones.
std::vector<Matrix> candidate_combinations(const Matrix& basis) {
    std::vector<Matrix> out;
    const std::size_t d = basis.rows();
    const FieldDescriptor f = basis.field();
    for (std::size_t a = 0; a < d; ++a) out.push_back(basis.row(a));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            out.push_back(basis.row(a) + basis.row(b));
            out.push_back(basis.row(a) - basis.row(b));
        }
    }
    Xorshift64Star rng(kWitnessSearchSeed);
    for (int trial = 0; trial < kRandomCandidates && d > 0; ++trial) {
        Matrix coeffs = random_matrix(1, d, f, rng, kRandomCoefficientBound);
        out.push_back(matmul(coeffs, basis));
    }
    return out;
}

}  // namespace

StructureMatrix witness_seed(FieldDescriptor field) {
    return StructureMatrix(Matrix(field, {{0, 0, 1, -1}, {1, 0, 1, 0}}));
}

StructureMatrix embed_step(const StructureMatrix& inner, const Matrix& x) {
    const std::size_t m = inner.dim();
    const std::size_t n = m + 1;
    const FieldDescriptor& f = inner.field();
    if (x.rows() != m || x.cols() != m || x.field() != f) {
        throw Error(ErrorKind::DimensionMismatch, "X'' must be " + std::to_string(m) + "x" + std::to_string(m));
    }
    Matrix data(n, n * n, f);
    data.set(0, 0, Scalar::one(f));
    for (std::size_t i = 1; i < n; ++i) {
        data.set_submatrix(1, i * n, x.col(i - 1));
        data.set_submatrix(1, i * n + 1, block(inner, i - 1));
    }
    return StructureMatrix(std::move(data));
}

std::vector<Scalar> witness_scan_values(std::size_t n, FieldDescriptor field) {
    std::vector<Scalar> out;
    for (std::int64_t v = 1; v <= static_cast<std::int64_t>(2 * n - 1); ++v) {
        Scalar s(field, v);
        if (s.is_zero() || std::find(out.begin(), out.end(), s) != out.end()) continue;
        out.push_back(std::move(s));
    }
    return out;
}

Witness witness_construct(std::size_t n, FieldDescriptor field) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "witness construction needs n >= 2");
    if (field.is_prime_field() && field.modulus() <= 2 * (n - 1)) {
        throw Error(ErrorKind::FieldTooSmall, field.to_string() + " has " + std::to_string(field.modulus()) +
                                                  " elements; need more than 2(n-1) = " + std::to_string(2 * (n - 1)));
    }

    StructureMatrix current = witness_seed(field);
    Witness out{current, WitnessTrace{n, current, {}}};

    for (std::size_t dim = 3; dim <= n; ++dim) {
        const InvariantReport inner_report = membership(current);
        const Matrix kernel = nullspace(orthogonality_constraints(current));
        const std::vector<Scalar> scan = witness_scan_values(dim, field);

        std::optional<WitnessStep> accepted;
        std::optional<StructureMatrix> next;
        for (const Matrix& flat : candidate_combinations(kernel)) {
            const Matrix x = unflatten(flat, current.dim());
            const Scalar x_square_trace = trace(matmul(x, x));
            if (x_square_trace.is_zero()) continue;
            for (const Scalar& t : scan) {
                StructureMatrix candidate = embed_step(current, x * t);
                InvariantReport report = membership(candidate);
                if (!report.p_invertible) continue;
                WitnessStep step{dim, x, t, report.det_b, *report.det_p, false, false};
                step.killing_left_block_identity = report.b == block_diag(Scalar::one(field), inner_report.b);
                step.killing_right_block_identity =
                    report.b_op == block_diag(Scalar::one(field) + t * t * x_square_trace, inner_report.b_op);
                accepted = std::move(step);
                next = std::move(candidate);
                break;
            }
            if (accepted) break;
        }
        if (!accepted) {
            throw Error(ErrorKind::ConstructionFailed,
                        "no admissible X'' and t found for dimension " + std::to_string(dim) + " over " + field.to_string());
        }
        current = std::move(*next);
        out.trace.steps.push_back(std::move(*accepted));
    }
    out.msc = current;
    return out;
}

bool exhaustive_feasible(std::size_t n, std::uint32_t p) {
    const std::size_t exponent = n * n * n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        total *= p;
        if (total > kMaxExhaustiveMscs) return false;
    }
    return true;
}

namespace {

struct Counts {
    std::uint64_t in_a0 = 0;
    std::uint64_t p_invertible = 0;
};

void tally(const StructureMatrix& a, Counts& c) {
    const InvariantReport r = membership(a);
    c.in_a0 += r.in_a0;
    c.p_invertible += r.p_invertible;
}

template <typename Body>
Counts run_partitioned(std::uint64_t total, unsigned workers, Body body) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
    std::vector<Counts> partial(workers);
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        threads.emplace_back([&, begin, end, w] {
            for (std::uint64_t i = begin; i < end; ++i) body(i, partial[w]);
        });
    }
    threads.clear();
    Counts sum;
    for (const Counts& c : partial) {
        sum.in_a0 += c.in_a0;
        sum.p_invertible += c.p_invertible;
    }
    return sum;
}

}  // namespace

DensityEstimate density_estimate(std::size_t n, std::uint32_t p, std::uint64_t samples, std::uint64_t seed,
                                 unsigned workers) {
    if (samples == 0) throw Error(ErrorKind::InvalidArgument, "density estimate needs at least one sample");
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    const FieldDescriptor field = FieldDescriptor::prime(p);
    const std::uint64_t base = splitmix64(seed);
    const Counts c = run_partitioned(samples, workers, [&](std::uint64_t i, Counts& acc) {
        tally(random_msc(n, field, base + i), acc);
    });
    return {n, p, samples, c.in_a0, c.p_invertible, seed, false};
}

DensityEstimate density_exhaustive(std::size_t n, std::uint32_t p) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    const FieldDescriptor field = FieldDescriptor::prime(p);
    if (!exhaustive_feasible(n, p)) {
        throw Error(ErrorKind::TooLarge, "p^(n^3) exceeds 10^6 for n=" + std::to_string(n) + ", p=" + std::to_string(p));
    }
    const std::size_t cells = n * n * n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= p;
    const Counts c = run_partitioned(total, 0, [&](std::uint64_t index, Counts& acc) {
        // Base-p digits of the index, most significant first, fill the MSC row-major.
        Matrix data(n, n * n, field);
        std::uint64_t rest = index;
        for (std::size_t cell = cells; cell-- > 0;) {
            data.set(cell / (n * n), cell % (n * n), Scalar(field, static_cast<std::int64_t>(rest % p)));
            rest /= p;
        }
        tally(StructureMatrix(std::move(data)), acc);
    });
    return {n, p, total, c.in_a0, c.p_invertible, 0, true};
}

}  // namespace msc
