#include "udrig/claim.hpp"

namespace udrig {

namespace {

std::vector<std::string> split_commas(std::string_view s, std::size_t max_parts) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (parts.size() + 1 < max_parts) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) break;
    parts.emplace_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  parts.emplace_back(s.substr(start));
  return parts;
}

Check from_ordering(Ordering o, bool equal_holds) {
  switch (o) {
    case Ordering::Equal:
      return equal_holds ? Check::Holds : Check::Violated;
    case Ordering::Undecided:
      return Check::Undecided;
    default:
      return Check::Violated;
  }
}

}  // namespace

Claim parse_claim(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("claim: expected '<kind>:<labels>'");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  auto bad = [&](const std::string& why) { return InputError("claim '" + std::string(text) + "': " + why); };
  if (kind == "star" || kind == "wstar") {
    auto parts = split_commas(rest, 3);
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) throw bad("expected two labels");
    return DistanceClaim{parts[0], parts[1], kind == "star" ? Mode::Strong : Mode::Weak};
  }
  if (kind == "diamond" || kind == "wdiamond") {
    auto parts = split_commas(rest, 5);
    if (parts.size() != 4) throw bad("expected four labels");
    for (const auto& p : parts) {
      if (p.empty()) throw bad("empty label");
    }
    return CongruenceClaim{parts[0], parts[1], parts[2], parts[3], kind == "diamond" ? Mode::Strong : Mode::Weak};
  }
  if (kind == "eps") {
    auto parts = split_commas(rest, 3);
    if (parts.size() != 3 || parts[0].empty() || parts[1].empty()) throw bad("expected X,Y,<epsilon>");
    CReal eps;
    try {
      eps = CReal::parse(parts[2]);
    } catch (const std::exception& e) {
      throw bad(std::string("epsilon: ") + e.what());
    }
    if (compare(eps, CReal(0L)) != Ordering::Greater) throw bad("epsilon must be positive");
    return EpsilonClaim{parts[0], parts[1], eps};
  }
  throw bad("unknown claim kind '" + std::string(kind) + "'");
}

std::string to_string(const Claim& claim) {
  struct Visitor {
    std::string operator()(const DistanceClaim& c) const {
      return std::string(c.mode == Mode::Strong ? "star:" : "wstar:") + c.x + "," + c.y;
    }
    std::string operator()(const CongruenceClaim& c) const {
      return std::string(c.mode == Mode::Strong ? "diamond:" : "wdiamond:") + c.k + "," + c.l + "," + c.m + "," + c.n;
    }
    std::string operator()(const EpsilonClaim& c) const { return "eps:" + c.x + "," + c.y + "," + c.epsilon.to_string(); }
  };
  return std::visit(Visitor{}, claim);
}

std::vector<std::string> claim_labels(const Claim& claim) {
  struct Visitor {
    std::vector<std::string> operator()(const DistanceClaim& c) const { return {c.x, c.y}; }
    std::vector<std::string> operator()(const CongruenceClaim& c) const { return {c.k, c.l, c.m, c.n}; }
    std::vector<std::string> operator()(const EpsilonClaim& c) const { return {c.x, c.y}; }
  };
  return std::visit(Visitor{}, claim);
}

Mode claim_mode(const Claim& claim) {
  if (const auto* d = std::get_if<DistanceClaim>(&claim)) return d->mode;
  if (const auto* k = std::get_if<CongruenceClaim>(&claim)) return k->mode;
  return Mode::Strong;
}

void require_labels(const Configuration& c, const Claim& claim) {
  for (const std::string& l : claim_labels(claim)) {
    if (!c.contains(l)) throw PreconditionError("claim label '" + l + "' is not in the configuration");
  }
}

Check evaluate(const Configuration& c, const Claim& claim, const PlacementSolution& s, int budget) {
  if (const auto* d = std::get_if<DistanceClaim>(&claim)) {
    CReal target = squared_distance(c.point(d->x), c.point(d->y));
    CReal image = squared_distance(s.point(d->x), s.point(d->y));
    return from_ordering(compare(image, target, budget), true);
  }
  if (const auto* k = std::get_if<CongruenceClaim>(&claim)) {
    CReal left = squared_distance(s.point(k->k), s.point(k->l));
    CReal right = squared_distance(s.point(k->m), s.point(k->n));
    return from_ordering(compare(left, right, budget), true);
  }
  const auto& e = std::get<EpsilonClaim>(claim);
  CReal gap = abs(distance(s.point(e.x), s.point(e.y)) - distance(c.point(e.x), c.point(e.y)));
  switch (compare(gap, e.epsilon, budget)) {
    case Ordering::Less:
    case Ordering::Equal:
      return Check::Holds;
    case Ordering::Greater:
      return Check::Violated;
    case Ordering::Undecided:
      return Check::Undecided;
  }
  return Check::Undecided;
}

CReal deviation(const Configuration& c, const Claim& claim, const PlacementSolution& s) {
  if (const auto* d = std::get_if<DistanceClaim>(&claim)) {
    return abs(distance(s.point(d->x), s.point(d->y)) - distance(c.point(d->x), c.point(d->y)));
  }
  if (const auto* k = std::get_if<CongruenceClaim>(&claim)) {
    return abs(distance(s.point(k->k), s.point(k->l)) - distance(s.point(k->m), s.point(k->n)));
  }
  const auto& e = std::get<EpsilonClaim>(claim);
  return abs(distance(s.point(e.x), s.point(e.y)) - distance(c.point(e.x), c.point(e.y))) - e.epsilon;
}

Check weak_admissible(const Configuration& classified, const PlacementSolution& s, int budget) {
  const CReal zero(0L);
  const CReal one(1L);
  bool undecided = false;
  const auto& labels = s.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      CReal d2 = squared_distance(s.point(labels[i]), s.point(labels[j]));
      Ordering collapse = compare(d2, zero, budget);
      if (collapse == Ordering::Equal) return Check::Violated;
      if (collapse == Ordering::Undecided) undecided = true;
      auto it = classified.pair_table().find(LabelPair::of(labels[i], labels[j]));
      if (it != classified.pair_table().end() && it->second == PairClass::NonUnit) {
        Ordering unit = compare(d2, one, budget);
        if (unit == Ordering::Equal) return Check::Violated;
        if (unit == Ordering::Undecided) undecided = true;
      }
    }
  }
  return undecided ? Check::Undecided : Check::Holds;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Proven:
      return "proven";
    case Outcome::Refuted:
      return "refuted";
    case Outcome::Undecided:
      return "undecided";
  }
  return "undecided";
}

Verdict Verdict::proven(std::string reason) {
  Verdict v;
  v.outcome = Outcome::Proven;
  v.reason = std::move(reason);
  return v;
}

Verdict Verdict::refuted(PlacementSolution witness, std::string reason) {
  Verdict v;
  v.outcome = Outcome::Refuted;
  v.witness = std::move(witness);
  v.reason = std::move(reason);
  return v;
}

Verdict Verdict::undecided(std::string reason) {
  Verdict v;
  v.outcome = Outcome::Undecided;
  v.reason = std::move(reason);
  return v;
}

}  // namespace udrig
