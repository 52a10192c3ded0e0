#include "dnl/harmonic.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "dnl/parallel.hpp"

namespace dnl {

unsigned thread_budget() {
    if (const char* env = std::getenv("DNL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_budget(), count));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) body(k);
        });
}

struct HarmonicExtension::Impl {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
};

HarmonicExtension::HarmonicExtension(const Grid& grid)
    : grid_(grid), slot_(grid.size(), -1), impl_(std::make_unique<Impl>()) {
    const auto& interior = grid.interior_nodes();
    for (std::size_t s = 0; s < interior.size(); ++s) slot_[interior[s]] = static_cast<long>(s);

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(5 * interior.size());
    for (std::size_t s = 0; s < interior.size(); ++s) {
        const NodeIndex k = interior[s];
        trips.emplace_back(s, s, 4.0);
        for (NodeIndex q : {grid.east(k), grid.west(k), grid.north(k), grid.south(k)})
            if (slot_[q] >= 0) trips.emplace_back(s, slot_[q], -1.0);
    }
    Eigen::SparseMatrix<double> K(interior.size(), interior.size());
    K.setFromTriplets(trips.begin(), trips.end());
    impl_->ldlt.compute(K);
    if (impl_->ldlt.info() != Eigen::Success)
        throw std::runtime_error("factorization of the interior Laplacian failed");
}

HarmonicExtension::~HarmonicExtension() = default;

std::vector<double> HarmonicExtension::solve_slots(const std::vector<double>& rhs) const {
    Eigen::Map<const Eigen::VectorXd> b(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
    Eigen::VectorXd x = impl_->ldlt.solve(b);
    return {x.data(), x.data() + x.size()};
}

void HarmonicExtension::extend(std::span<double> u) const {
    if (u.size() != grid_.size()) throw std::invalid_argument("field size does not match grid");
    const auto& interior = grid_.interior_nodes();
    std::vector<double> rhs(interior.size(), 0.0);
    for (std::size_t s = 0; s < interior.size(); ++s) {
        const NodeIndex k = interior[s];
        for (NodeIndex q : {grid_.east(k), grid_.west(k), grid_.north(k), grid_.south(k)})
            if (slot_[q] < 0) rhs[s] += u[q];
    }
    const std::vector<double> x = solve_slots(rhs);
    for (std::size_t s = 0; s < interior.size(); ++s) u[interior[s]] = x[s];
}

FlatBoundaryKernel::FlatBoundaryKernel(const HarmonicExtension& ext)
    : ext_(ext), n_(ext.grid().flat_nodes().size()), p_(n_ * n_, 0.0) {
    const Grid& grid = ext.grid();
    const auto& flat = grid.flat_nodes();
    const std::size_t slots = grid.interior_nodes().size();
    // Column k: unit value on flat node k. Its only Interior neighbour is the
    // inward node, so the right-hand side is a single unit entry.
    parallel_for(n_, [&](std::size_t k) {
        const long s = ext.slot(grid.east(flat[k]));
        if (s < 0) return;
        std::vector<double> rhs(slots, 0.0);
        rhs[s] = 1.0;
        const std::vector<double> x = ext.solve_slots(rhs);
        for (std::size_t j = 0; j < n_; ++j) {
            const long sj = ext.slot(grid.east(flat[j]));
            if (sj >= 0) p_[j * n_ + k] = std::max(0.0, x[sj]);
        }
    });
}

std::vector<double> FlatBoundaryKernel::offset(std::span<const double> arc_values) const {
    const Grid& grid = ext_.grid();
    std::vector<double> u(grid.size(), 0.0);
    for (NodeIndex k : grid.arc_nodes()) u[k] = arc_values[k];
    ext_.extend(u);
    std::vector<double> q(n_);
    const auto& flat = grid.flat_nodes();
    for (std::size_t j = 0; j < n_; ++j) q[j] = u[grid.east(flat[j])];
    return q;
}

const HarmonicExtension& SolverWorkspace::extension() const {
    std::call_once(ext_once_, [&] { ext_ = std::make_unique<HarmonicExtension>(grid_); });
    return *ext_;
}

const FlatBoundaryKernel& SolverWorkspace::kernel() const {
    std::call_once(kernel_once_, [&] { kernel_ = std::make_unique<FlatBoundaryKernel>(extension()); });
    return *kernel_;
}

}  // namespace dnl
