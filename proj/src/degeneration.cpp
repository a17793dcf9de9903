#include "cohstab/degeneration.hpp"

#include <cstdlib>
#include <map>
#include <tuple>

namespace cohstab {

ChargeValue descended_charge(const QuotientClass& qc) { return {Rational(-qc.c), Rational(qc.a)}; }

bool s_equivalent(const ClassVector& v1, const ClassVector& v2) {
  return project_mod_kernel(v1) == project_mod_kernel(v2);
}

std::string to_string(WeakClass c) {
  switch (c) {
    case WeakClass::positive:
      return "positive";
    case WeakClass::phase1:
      return "phase1";
    case WeakClass::kernel:
      return "kernel";
    case WeakClass::violation:
      break;
  }
  return "violation";
}

WeakClass weak_classify(const ClassVector& v) {
  const ChargeValue z = central_charge(v, kWeakPoint);
  if (z.im > 0) return WeakClass::positive;
  if (z.im == 0 && z.re < 0) return WeakClass::phase1;
  if (z.im == 0 && z.re == 0) return WeakClass::kernel;
  return WeakClass::violation;
}

std::vector<std::vector<ClassVector>> sequiv_classes(const std::vector<ClassVector>& vs) {
  std::vector<std::vector<ClassVector>> classes;
  std::map<QuotientClass, std::size_t> index;
  for (const ClassVector& v : vs) {
    auto [it, fresh] = index.try_emplace(project_mod_kernel(v), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }

  auto key = [](const ClassVector& v) {
    return std::make_tuple(std::llabs(v.r), std::llabs(v.d), std::llabs(v.n), v);
  };
  for (auto& members : classes) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (key(members[i]) < key(members[best])) best = i;
    }
    ClassVector rep = members[best];
    members.erase(members.begin() + static_cast<std::ptrdiff_t>(best));
    members.insert(members.begin(), rep);
  }
  return classes;
}

}  // namespace cohstab
