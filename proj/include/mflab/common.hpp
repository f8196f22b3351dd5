#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mflab {

using Vec2 = Eigen::Vector2d;
using Vec = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Base class for all library errors; subcommands map these to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid geometry input (self-intersecting polygon, degenerate corner, ...).
struct GeometryError : Error {
    using Error::Error;
};

/// Malformed or inconsistent user input (config values, preconditions).
struct InputError : Error {
    using Error::Error;
};

/// Mesh generation could not satisfy the requested resolution.
struct RefinementError : Error {
    using Error::Error;
};

/// Non-finite integrand or other quadrature breakdown.
struct QuadratureError : Error {
    using Error::Error;
};

/// Requested parameter lies at or beyond the existence/uniqueness threshold.
struct ThresholdError : Error {
    using Error::Error;
};

/// Iterative solver failed to reach its tolerance.
struct NonconvergenceError : Error {
    Vec last_iterate;
    NonconvergenceError(const std::string& msg, Vec iterate)
        : Error(msg), last_iterate(std::move(iterate)) {}
    explicit NonconvergenceError(const std::string& msg) : Error(msg) {}
};

/// Formats a double with 17 significant digits (round-trip exact).
std::string fmt17(double v);

/// FNV-1a 64-bit hash; used to stamp output files with a config fingerprint.
std::uint64_t fnv1a64(const std::string& s);

inline constexpr const char* kToolVersion = "mflab 1.0.0";

double cross2(const Vec2& a, const Vec2& b);

/// Deterministic 64-bit generator (xoshiro-free: plain splitmix64) with
/// explicit uniform mappings, so seeded runs are bit-identical across
/// standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    /// Uniform in [0,1).
    double next_double();
    /// Uniform in [lo,hi).
    double uniform(double lo, double hi);

  private:
    std::uint64_t state_;
};

/// Runs fn(i) for i in [0,n) on up to `jobs` threads. Work items must be
/// independent; results should be written to preallocated slots so the
/// outcome does not depend on scheduling.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace mflab
