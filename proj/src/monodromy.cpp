#include "altlines/monodromy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace altlines {

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("Perm: not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::of_type(const CycleType& type) {
  std::vector<std::uint8_t> img;
  int start = 0;
  for (int len : type) {
    if (len < 1) throw std::invalid_argument("Perm::of_type: nonpositive cycle length");
    for (int i = 0; i < len; ++i) img.push_back(static_cast<std::uint8_t>(start + (i + 1) % len));
    start += len;
  }
  return Perm(std::move(img));
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm out;
  out.img_.resize(b.img_.size());
  for (std::size_t i = 0; i < b.img_.size(); ++i) out.img_[i] = a.img_[b.img_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

CycleType Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  CycleType out;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool Perm::is_even() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

int Perm::order() const {
  int l = 1;
  for (int len : cycle_type()) l = std::lcm(l, len);
  return l;
}

std::uint32_t Perm::key() const {
  std::uint32_t k = 0;
  for (auto v : img_) k = k * 8 + v;
  return k;
}

std::string cycle_string(const CycleType& type) {
  std::string s = "(";
  for (std::size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Groups

std::vector<Perm> group_closure(const std::vector<Perm>& gens) {
  if (gens.empty()) throw std::invalid_argument("group_closure: no generators");
  const int n = gens.front().size();
  if (n > 10) throw std::invalid_argument("group_closure: degree too large");
  std::vector<Perm> elems{Perm::identity(n)};
  std::unordered_set<std::uint32_t> seen{elems.front().key()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm h = g * elems[i];
      if (seen.insert(h.key()).second) elems.push_back(std::move(h));
    }
  }
  return elems;
}

bool is_transitive(const std::vector<Perm>& gens, int n) {
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int y = g[x];
      if (!reached[static_cast<std::size_t>(y)]) {
        reached[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

GroupFingerprint fingerprint(const std::vector<Perm>& gens, int n) {
  GroupFingerprint fp;
  fp.degree = n;
  const auto elems = group_closure(gens);
  fp.order = elems.size();
  fp.abelian = true;
  for (const auto& a : gens) {
    for (const auto& b : gens) fp.abelian = fp.abelian && a * b == b * a;
  }
  fp.even = std::all_of(gens.begin(), gens.end(), [](const Perm& g) { return g.is_even(); });
  for (const auto& e : elems) {
    fp.max_element_order = std::max(fp.max_element_order, e.order());
    fp.involutions += e.order() == 2;
  }
  // Derived subgroup: normal closure of the generator commutators.
  std::vector<Perm> comms;
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      Perm c = a * b * a.inverse() * b.inverse();
      if (!(c == Perm::identity(n))) comms.push_back(c);
    }
  }
  if (comms.empty()) {
    fp.derived_order = 1;
    return fp;
  }
  std::vector<Perm> derived = group_closure(comms);
  for (bool grew = true; grew;) {
    grew = false;
    std::unordered_set<std::uint32_t> keys;
    for (const auto& d : derived) keys.insert(d.key());
    for (const auto& g : gens) {
      for (const auto& c : comms) {
        Perm conj = g * c * g.inverse();
        if (!keys.count(conj.key())) {
          comms.push_back(conj);
          grew = true;
        }
      }
    }
    if (grew) derived = group_closure(comms);
  }
  fp.derived_order = derived.size();
  return fp;
}

std::string GroupFingerprint::name() const {
  std::uint64_t fact = 1;
  for (int i = 2; i <= degree; ++i) fact *= static_cast<std::uint64_t>(i);
  if (degree >= 2 && order == fact) return "S" + std::to_string(degree);
  if (degree >= 3 && order * 2 == fact && even) return "A" + std::to_string(degree);
  if (abelian && static_cast<std::uint64_t>(max_element_order) == order) return "C" + std::to_string(order);
  if (order == 4 && abelian && max_element_order == 2) return "V4";
  if (order == 6 && !abelian) return "S3";
  if (order == 8 && !abelian) return involutions == 5 ? "D4" : "Q8";
  if (order == 10 && !abelian) return "D5";
  if (order == 12 && !abelian && derived_order == 4) return "A4";
  if (order == 20 && !abelian) return "F20";
  return "order" + std::to_string(order) + (abelian ? "-abelian" : "") + "-derived" + std::to_string(derived_order);
}

// ---------------------------------------------------------------------------
// Realizations

namespace {

std::vector<Perm> all_of_type(const CycleType& type, int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  CycleType sorted = type;
  std::sort(sorted.rbegin(), sorted.rend());
  std::vector<Perm> out;
  do {
    Perm p(img);
    if (p.cycle_type() == sorted) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

void validate(const BranchData& data) {
  if (data.n < 1 || data.n > 8) throw std::invalid_argument("realizable_groups: n must be between 1 and 8");
  if (data.types.empty() || data.types.size() > 4) throw std::invalid_argument("realizable_groups: 1 to 4 branch types");
  for (const auto& t : data.types) {
    if (std::accumulate(t.begin(), t.end(), 0) != data.n) throw std::invalid_argument("realizable_groups: type does not sum to n");
  }
}

std::uint64_t class_size(const CycleType& type, int n) {
  std::uint64_t size = 1;
  for (int i = 2; i <= n; ++i) size *= static_cast<std::uint64_t>(i);
  std::vector<int> counts(static_cast<std::size_t>(n + 1), 0);
  for (int len : type) {
    size /= static_cast<std::uint64_t>(len);
    ++counts[static_cast<std::size_t>(len)];
  }
  for (int c : counts) {
    for (int i = 2; i <= c; ++i) size /= static_cast<std::uint64_t>(i);
  }
  return size;
}

}  // namespace

RealizationReport realizable_groups(const BranchData& data, bool reorder) {
  validate(data);
  const int n = data.n;
  std::vector<CycleType> types = data.types;
  for (auto& t : types) std::sort(t.rbegin(), t.rend());
  if (reorder) {
    std::sort(types.begin(), types.end(),
              [n](const CycleType& a, const CycleType& b) { return class_size(a, n) > class_size(b, n); });
    // Largest class fixed first, second largest derived last.
    if (types.size() >= 2) std::rotate(types.begin() + 1, types.begin() + 2, types.end());
  }
  RealizationReport rep;
  const Perm first = Perm::of_type(types.front());
  if (types.size() == 1) {
    if (first == Perm::identity(n)) {
      ++rep.tuples;
      if (is_transitive({first}, n)) {
        ++rep.transitive;
        rep.groups.insert(fingerprint({first}, n));
      }
    }
    return rep;
  }
  std::vector<std::vector<Perm>> middle;
  for (std::size_t i = 1; i + 1 < types.size(); ++i) middle.push_back(all_of_type(types[i], n));
  const CycleType& last_type = types.back();
  std::vector<Perm> tuple{first};
  std::function<void(std::size_t, const Perm&)> walk = [&](std::size_t depth, const Perm& prod) {
    if (depth == middle.size()) {
      Perm last = prod.inverse();
      if (last.cycle_type() != last_type) return;
      ++rep.tuples;
      tuple.push_back(last);
      if (is_transitive(tuple, n)) {
        ++rep.transitive;
        rep.groups.insert(fingerprint(tuple, n));
      }
      tuple.pop_back();
      return;
    }
    for (const auto& s : middle[depth]) {
      tuple.push_back(s);
      walk(depth + 1, prod * s);
      tuple.pop_back();
    }
  };
  walk(0, first);
  return rep;
}

bool jordan_check(int n) {
  if (n < 4 || n > 8 || n % 2 != 0) throw std::invalid_argument("jordan_check: n must be even, 4 <= n <= 8");
  CycleType big{n - 1, 1};
  CycleType three{3};
  for (int i = 3; i < n; ++i) three.push_back(1);
  auto rep = realizable_groups({n, {big, big, three}});
  if (rep.groups.empty()) return false;
  return std::all_of(rep.groups.begin(), rep.groups.end(),
                     [n](const GroupFingerprint& g) { return g.name() == "A" + std::to_string(n); });
}

bool riemann_hurwitz(const BranchData& data, int genus_source, int genus_target) {
  int ramification = 0;
  for (const auto& t : data.types) {
    for (int e : t) ramification += e - 1;
  }
  return 2 * genus_source - 2 == data.n * (2 * genus_target - 2) + ramification;
}

std::vector<TrichotomyRow> quartic_trichotomy() {
  const std::vector<CycleType> even_types = {{3, 1}, {2, 2}};
  std::vector<TrichotomyRow> rows;
  for (std::size_t i = 0; i < even_types.size(); ++i) {
    for (std::size_t j = i; j < even_types.size(); ++j) {
      for (std::size_t k = j; k < even_types.size(); ++k) {
        TrichotomyRow row;
        row.types = {even_types[i], even_types[j], even_types[k]};
        BranchData data{4, row.types};
        row.groups = realizable_groups(data).groups;
        row.genus_zero = riemann_hurwitz(data, 0, 0);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace altlines
