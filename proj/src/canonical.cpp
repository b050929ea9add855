#include "fpush/canonical.hpp"

#include <sstream>

namespace fpush {

GradedModule para_canonical(const GradedModule& m, int i) {
  const int d = m.ring().dimension();
  if (i < 0 || i > d) return zero_module(m.ring_ptr());
  const int n = int(m.ring().nvars());
  return ext_module(n - d + i, m, RationalDegree(-m.ring().ambient().weight_sum()));
}

std::int64_t h_invariant(const GradedModule& m) { return lambda0(para_canonical(m, 1)); }

std::string describe(const GradedModule& m) {
  const auto& T = m.ring().ambient();
  std::ostringstream os;
  os << "p = " << T.characteristic() << "\nvariables:";
  for (std::size_t i = 0; i < T.nvars(); ++i) os << " " << T.names()[i] << "(" << T.weights()[i] << ")";
  os << "\nrelations:";
  for (const auto& f : m.ring().relations()) os << " [" << T.format(f) << "]";
  os << "\ngenerator degrees:";
  for (const auto& d : m.generator_degrees()) os << " " << d.str();
  os << "\npresentation:\n";
  for (const auto& row : m.relations()) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << T.format(row[j]);
    os << "]\n";
  }
  return os.str();
}

McmCertificate mcm_from_module(const GradedModule& m) {
  const int d = m.ring().dimension();
  if (m.hilbert_series().is_zero()) throw PreconditionError("zero module");
  const int dm = dimension(m);
  if (dm != d) throw PreconditionError("module dimension " + std::to_string(dm) + " differs from ring dimension " + std::to_string(d));
  if (d > 3) throw PreconditionError("only rings of dimension at most three are supported");
  McmCertificate out;
  if (d == 3) {
    out.h = h_invariant(m);
    if (out.h > 0) throw PreconditionError("h(M) = " + std::to_string(out.h) + " > 0: omega^1(M) has depth zero");
  }
  out.module = para_canonical(m, 0);
  auto res = free_resolution(out.module);
  out.betti = res.betti_table();
  out.depth = int(m.ring().nvars()) - int(res.length());
  if (out.depth != d)
    throw TheoremViolation("omega^0(M) has depth " + std::to_string(out.depth) + " but " + std::to_string(d) +
                               " is forced",
                           describe(m) + "omega^0 resolution:\n" + out.betti);
  return out;
}

}  // namespace fpush
