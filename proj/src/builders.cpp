#include <algorithm>
#include <string>

#include "khr/dsl.hpp"

namespace khr {

HyperringTable build_classical_zn(int n) {
  if (n < 2 || n > kMaxOrder) throw ParamOutOfRange("classical_zn needs 2 <= n <= 64, got " + std::to_string(n));
  std::vector<std::string> names;
  std::vector<ElementSubset> add;
  std::vector<Element> mul;
  for (int x = 0; x < n; ++x) names.push_back(std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add.push_back(ElementSubset::singleton((x + y) % n));
      mul.push_back((x * y) % n);
    }
  return HyperringTable("Z" + std::to_string(n), std::move(names), std::move(add), std::move(mul), 0, 1);
}

HyperringTable build_chain(int n, ChainMulRule rule) {
  if (n < 2 || n > kMaxOrder) throw ParamOutOfRange("chain needs 2 <= n <= 64, got " + std::to_string(n));
  std::vector<std::string> names;
  names.push_back("0");
  for (int i = 1; i + 1 < n; ++i)
    names.push_back(n <= 27 ? std::string(1, static_cast<char>('a' + i - 1)) : "c" + std::to_string(i));
  names.push_back("1");

  std::vector<ElementSubset> add;
  std::vector<Element> mul;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add.push_back(x == y ? ElementSubset::full(x + 1) : ElementSubset::singleton(std::max(x, y)));
      switch (rule) {
        case ChainMulRule::Min: mul.push_back(std::min(x, y)); break;
      }
    }
  return HyperringTable("chain" + std::to_string(n) + "-min", std::move(names), std::move(add), std::move(mul), 0,
                        n - 1);
}

HyperringTable build_product(const HyperringTable& left, const HyperringTable& right) {
  const int n1 = left.order();
  const int n2 = right.order();
  if (n1 * n2 > kMaxOrder)
    throw ParamOutOfRange("product order " + std::to_string(n1 * n2) + " exceeds 64");
  auto index = [n2](Element a, Element b) { return a * n2 + b; };

  std::vector<std::string> names;
  for (Element a = 0; a < n1; ++a)
    for (Element b = 0; b < n2; ++b) names.push_back("(" + left.name_of(a) + ";" + right.name_of(b) + ")");

  const int n = n1 * n2;
  std::vector<ElementSubset> add(static_cast<std::size_t>(n * n));
  std::vector<Element> mul(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element x1 = x / n2, x2 = x % n2, y1 = y / n2, y2 = y % n2;
      ElementSubset cell;
      for (Element s1 : left.add(x1, y1))
        for (Element s2 : right.add(x2, y2)) cell.insert(index(s1, s2));
      add[static_cast<std::size_t>(x * n + y)] = cell;
      mul[static_cast<std::size_t>(x * n + y)] = index(left.mul(x1, y1), right.mul(x2, y2));
    }
  std::optional<Element> one;
  if (left.one() && right.one()) one = index(*left.one(), *right.one());
  return HyperringTable(left.name() + "x" + right.name(), std::move(names), std::move(add), std::move(mul),
                        index(left.zero(), right.zero()), one);
}

HyperringTable build_from_tables(std::string name, std::vector<std::string> names, std::vector<ElementSubset> add,
                                 std::vector<Element> mul, Element zero, std::optional<Element> one) {
  if (names.size() < 2) throw ParamOutOfRange("from_tables needs at least two elements");
  try {
    return HyperringTable(std::move(name), std::move(names), std::move(add), std::move(mul), zero, one);
  } catch (const StructureError& e) {
    throw ParamOutOfRange(e.what());
  }
}

HyperringTable build_h3() {
  // index 0 = 0, 1 = 1, 2 = a
  const ElementSubset z = ElementSubset::of({0}), o = ElementSubset::of({1}), a = ElementSubset::of({2});
  const ElementSubset all = ElementSubset::of({0, 1, 2}), b = ElementSubset::of({0, 2});
  return HyperringTable("H3", {"0", "1", "a"},
                        {z, o, a,  //
                         o, all, o,  //
                         a, o, b},
                        {0, 0, 0,  //
                         0, 1, 2,  //
                         0, 2, 0},
                        0, 1);
}

}  // namespace khr
