// Walks a small framework through its attack matrix: a couple of dual
// interchanges, the sub-blocks of a candidate set, its norm form, and the
// extensions under every semantics.
#include <iostream>

#include "afmx/cfenum.hpp"
#include "afmx/semantics.hpp"

int main() {
  using namespace afmx;

  const Framework f(5, {{1, 2}, {1, 3}, {3, 1}, {4, 5}, {5, 1}, {5, 4}});
  const AttackMatrix m = natural_matrix(f);
  std::cout << "M(F)\n" << m.cells().to_string() << '\n';

  const AttackMatrix swapped = dual_interchange(dual_interchange(m, 1, 3), 3, 5);
  std::cout << "after 1<->3, 3<->5: labels";
  for (Arg a : swapped.labels().image()) std::cout << ' ' << a;
  std::cout << '\n' << swapped.cells().to_string() << '\n';

  const ArgSet s{2, 3};
  const SubBlocks b = extract_subblocks(m, s);
  std::cout << "S = " << s << "\nM^s\n" << b.s.to_string() << "M^a\n" << b.a.to_string() << "M^c\n" << b.c.to_string() << '\n';

  const NormForm nf = to_norm_form(f, s);
  std::cout << "norm form (k,q,l) = (" << nf.k << ',' << nf.q << ',' << nf.l << ")\n" << nf.matrix.cells().to_string();
  std::cout << "stable " << is_stable(nf) << ", admissible " << is_admissible(nf) << ", complete "
            << (is_admissible(nf) && is_complete(nf)) << "\n\n";

  std::cout << "basic sets\n";
  const BasicSets basic = basic_sets(f);
  for (Arg i = 1; i <= f.size(); ++i) {
    std::cout << "  C(" << i << ") = ";
    if (basic.of(i)) std::cout << *basic.of(i) << '\n';
    else std::cout << "undefined (self-attacker)\n";
  }

  for (Semantics tag : kAllSemantics) {
    std::cout << to_code(tag) << ':';
    for (const ArgSet& e : extensions(f, tag).sets) std::cout << ' ' << e;
    std::cout << '\n';
  }
}
