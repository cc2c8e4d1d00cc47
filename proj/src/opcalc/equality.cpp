#include "gbi/opcalc/equality.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gbi/exactring/errors.hpp"

namespace gbi {

EqualityCertificate operators_equal(const Operator& lhs, const Operator& rhs, int degree_bound,
                                    const EqualityOptions& options) {
  if (degree_bound < 0) throw StructuralError("degree bound must be non-negative");
  if (lhs.n() != rhs.n()) throw StructuralError("operators disagree on variable count");
  const auto basis = module_basis(lhs.n(), degree_bound, options.clifford);

  auto differs = [&](const BasisKey& k) { return !(lhs.apply_basis_transient(k) == rhs.apply_basis_transient(k)); };

  const std::size_t none = basis.size();
  std::atomic<std::size_t> first{none};
  const int jobs = std::max(1, options.jobs);

  if (jobs == 1) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (differs(basis[i])) {
        first = i;
        break;
      }
    }
  } else {
    // Worker w scans indices w, w+jobs, ...; the smallest failing index wins,
    // so the witness matches the serial scan.
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < basis.size() && i < first.load(); i += jobs) {
            if (differs(basis[i])) {
              std::size_t cur = first.load();
              while (i < cur && !first.compare_exchange_weak(cur, i)) {
              }
              return;
            }
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  EqualityCertificate cert;
  cert.degree_bound = degree_bound;
  if (first == none) return cert;

  const BasisKey& k = basis[first];
  Witness w{k, lhs.apply_basis_transient(k), rhs.apply_basis_transient(k)};
  if (w.lhs == w.rhs) throw std::logic_error("counterexample witness does not reproduce at " + k.to_string());
  cert.status = EqualityCertificate::Status::kCounterexample;
  cert.witness = std::move(w);
  return cert;
}

}  // namespace gbi
