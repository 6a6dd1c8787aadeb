#include "leecodes/constructions.hpp"

namespace leecodes {

namespace {

using Row = std::vector<std::int64_t>;

LinearCode cyclic(const Modulus& m, const Row& g) {
  return LinearCode::from_generator(CodeMatrix(m, std::vector<Row>{g}, g.size()));
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_spec(const EquidistantSpec& spec, int rank) {
  const auto& m = spec.modulus;
  if (!m.odd()) throw InputError("equidistant construction needs p odd; p = 2 is covered by the catalog");
  if (spec.level < 1 || spec.level > m.s()) throw InputError("level i must lie in [1, s]");
  if (spec.rank != rank) throw InputError("construction expects rank " + std::to_string(rank));
  if (rank == 2 && m.s() < 2) throw InputError("rank-2 construction needs s >= 2");
}

}  // namespace

std::vector<NamedCode> catalog_mld(const Modulus& m, int n) {
  if (n < 1) throw InputError("length n must be positive");
  std::vector<NamedCode> out;
  if (m.q() == 5 && n == 2) out.push_back({"<(1,2)>", cyclic(m, {1, 2})});
  if (!m.odd()) {
    const std::int64_t h = m.power(m.s() - 1);
    LinearCode rep = cyclic(m, Row(static_cast<std::size_t>(n), h));
    out.push_back({"<(" + std::to_string(h) + ",...," + std::to_string(h) + ")>", rep});
    if (m.q() == 4) {
      if (n > 1) out.push_back({"dual of <(2,...,2)>", rep.dual()});
      out.push_back({"ambient space", LinearCode::ambient(m, static_cast<std::size_t>(n))});
    }
  }
  return out;
}

LinearCode known_equidistant(const Modulus& m) {
  Row g;
  if (m.odd() && m.s() == 1) {
    for (std::int64_t a = 1; a <= (m.p() - 1) / 2; ++a) g.push_back(a);
  } else if (!m.odd()) {
    for (std::int64_t a = 1; a < m.q(); ++a) g.push_back(a);
  } else {
    throw InputError("no known cyclic equidistant family for odd p with s > 1; use the equidistant builders");
  }
  return cyclic(m, g);
}

std::int64_t EquidistantSpec::predicted_weight() const {
  const std::int64_t p = modulus.p();
  if (rank == 1 && modulus.s() == 1) return (p * p - 1) / 8;
  return ipow(p, 2 * modulus.s() - level) * (p * p - 1) / 8;
}

std::vector<std::int64_t> layer_representatives(const Modulus& m, int l) {
  if (l < 0 || l >= m.s()) throw InputError("layer index must lie in [0, s-1]");
  Row out;
  for (std::int64_t a = m.power(l); a <= m.max_weight(); a += m.power(l))
    if (m.valuation(a) == l) out.push_back(a);
  return out;
}

std::vector<std::int64_t> equidistant_rank1_generator(const EquidistantSpec& spec) {
  check_spec(spec, 1);
  const auto& m = spec.modulus;
  const int i = spec.level;
  Row g;
  for (auto u : layer_representatives(m, i - 1)) g.insert(g.end(), static_cast<std::size_t>(m.p()), u);
  for (int j = i; j < m.s(); ++j)
    for (auto u : layer_representatives(m, j)) g.insert(g.end(), static_cast<std::size_t>(m.p() - 1), u);
  return g;
}

LinearCode equidistant_rank1(const EquidistantSpec& spec) {
  check_spec(spec, 1);
  if (spec.modulus.s() == 1) return known_equidistant(spec.modulus);
  return cyclic(spec.modulus, equidistant_rank1_generator(spec));
}

CodeMatrix equidistant_rank2_generator(const EquidistantSpec& spec) {
  check_spec(spec, 2);
  const auto& m = spec.modulus;
  const int i = spec.level;
  const Row x = layer_representatives(m, m.s() - 1);
  Row y = x;
  for (auto a : x) y.push_back(m.neg(a));
  Row z{0};
  z.insert(z.end(), y.begin(), y.end());

  Row top, bottom;
  auto column = [&](std::int64_t a, std::int64_t b) {
    top.push_back(a);
    bottom.push_back(b);
  };
  // below each element of layer i-1: the whole socle; below deeper layers: its non-zero part
  for (auto u : layer_representatives(m, i - 1))
    for (auto b : z) column(u, b);
  for (int l = i; l < m.s(); ++l)
    for (auto u : layer_representatives(m, l))
      for (auto b : y) column(u, b);
  for (auto b : x) column(0, b);
  return CodeMatrix(m, std::vector<Row>{top, bottom}, top.size());
}

LinearCode equidistant_rank2(const EquidistantSpec& spec) {
  return LinearCode::from_generator(equidistant_rank2_generator(spec));
}

PredictedSubtypes predict_support_subtype(const EquidistantSpec& spec) {
  check_spec(spec, spec.rank == 2 ? 2 : 1);
  const auto& m = spec.modulus;
  const std::int64_t p = m.p();
  const int s = m.s();
  const int i = spec.level;
  const auto half = static_cast<int>((p - 1) / 2);
  PredictedSubtypes out;
  std::vector<int> counts(static_cast<std::size_t>(s) + 1, 0);

  if (spec.rank == 1 && s == 1) {
    counts[0] = half;
  } else {
    counts[static_cast<std::size_t>(i - 1)] = static_cast<int>(ipow(p, s - i + 1)) * half;
    for (int j = i; j < s; ++j) counts[static_cast<std::size_t>(j)] = static_cast<int>(ipow(p, s - j - 1) * (p - 1)) * half;
  }
  if (spec.rank == 2) {
    std::vector<int> first = counts;
    first[static_cast<std::size_t>(s)] = half;
    counts[static_cast<std::size_t>(s - 1)] += half;
    out.first = SupportSubtype{first};
    int n = 0;
    for (int c : counts) n += c;
    std::vector<int> second(static_cast<std::size_t>(s) + 1, 0);
    second[static_cast<std::size_t>(s)] = static_cast<int>(ipow(p, s - i)) * half;
    second[static_cast<std::size_t>(s - 1)] = n - second[static_cast<std::size_t>(s)];
    out.second = SupportSubtype{second};
  }
  out.code = SupportSubtype{counts};
  for (int c : counts) out.length += c;
  return out;
}

}  // namespace leecodes
