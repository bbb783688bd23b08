#include <algorithm>
#include <exception>


#include "eqcoh/kernels.hpp"

namespace eqcoh::kernels::parallel {

namespace {

// Exceptions may not leave an OpenMP region; keep the first and rethrow after.
class FirstError {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(eqcoh_first_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const WeylGroup& weyl,
                                                               std::span<const std::size_t> elements) {
  const auto n = static_cast<long>(elements.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> per_upper(elements.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long j = 0; j < n; ++j) {
    const int lv = weyl[elements[j]].length;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (weyl[elements[i]].length + 1 == lv && weyl.bruhat_leq(elements[i], elements[j]))
        per_upper[j].emplace_back(i, static_cast<std::size_t>(j));
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto& v : per_upper) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Coweight>> coweight_orbits(const WeylGroup& weyl, std::span<const Coweight> dominant) {
  const auto n = static_cast<long>(dominant.size());
  std::vector<std::vector<Coweight>> out(dominant.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) err.run([&] { out[k] = coweight_orbit(weyl, dominant[k]); });
  err.rethrow();
  return out;
}

std::vector<RingElement> euler_batch(Theory theory, std::span<const std::vector<Weight>> multisets, std::size_t rank,
                                     const FormalGroupLaw& fgl) {
  const auto n = static_cast<long>(multisets.size());
  std::vector<RingElement> out(multisets.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) err.run([&] { out[k] = euler_product(theory, multisets[k], rank, fgl); });
  err.rethrow();
  return out;
}

}  // namespace eqcoh::kernels::parallel
