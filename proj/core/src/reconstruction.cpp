#include "pbfa/reconstruction.hpp"

#include <nlohmann/json.hpp>

#include <deque>
#include <stdexcept>

#include "pbfa/calculus.hpp"

namespace pbfa {

DerivativeProfile profile_of(const FunctionTable& f) {
  DerivativeProfile p;
  p.arity = f.arity();
  p.meet.reserve(p.arity);
  p.join.reserve(p.arity);
  for (int k = 1; k <= p.arity; ++k) {
    p.meet.push_back(meet_derivative(f, k));
    p.join.push_back(join_derivative(f, k));
  }
  return p;
}

bool verify_profile(const FunctionTable& f, const DerivativeProfile& profile) {
  if (f.arity() != profile.arity) throw std::invalid_argument("verify_profile: arity mismatch");
  return profile_of(f) == profile;
}

namespace {

void validate_shape(const DerivativeProfile& p) {
  if (p.arity < 1) throw std::invalid_argument("reconstruct needs arity >= 1; an empty profile determines nothing");
  detail::check_arity(p.arity);
  if (p.meet.size() != static_cast<std::size_t>(p.arity) || p.join.size() != static_cast<std::size_t>(p.arity)) {
    throw std::invalid_argument("profile must carry one meet and one join table per variable");
  }
  for (int k = 1; k <= p.arity; ++k) {
    if (p.meet[k - 1].arity() != p.arity || p.join[k - 1].arity() != p.arity) {
      throw std::invalid_argument("profile table arity mismatch at variable " + std::to_string(k));
    }
  }
}

std::optional<InconsistencyWitness> invariant_breach(const DerivativeProfile& p) {
  for (int k = 1; k <= p.arity; ++k) {
    const FunctionTable& lo = p.meet[k - 1];
    const FunctionTable& hi = p.join[k - 1];
    for (std::uint32_t x = 0; x < lo.size(); ++x) {
      if (hi[x] < lo[x]) {
        return InconsistencyWitness{InconsistencyWitness::Kind::InvariantBreach, k, Point(p.arity, x),
                                    "meet derivative exceeds join derivative"};
      }
    }
    if (depends_on(lo, k) || depends_on(hi, k)) {
      return InconsistencyWitness{InconsistencyWitness::Kind::InvariantBreach, k, Point::zero(p.arity),
                                  "derivative depends on its own variable"};
    }
  }
  return std::nullopt;
}

struct EdgePair {
  const Rational* lo;
  const Rational* hi;
};

}  // namespace

ReconstructionResult reconstruct(const DerivativeProfile& profile) {
  validate_shape(profile);
  if (auto breach = invariant_breach(profile)) return *breach;

  const int n = profile.arity;
  const std::uint32_t count = 1u << n;
  // Pair of endpoint values on the k-edge at x (taken at the lower endpoint).
  const auto edge = [&](std::uint32_t x, int k) {
    const std::uint32_t lower = x & ~(1u << (k - 1));
    return EdgePair{&profile.meet[k - 1][lower], &profile.join[k - 1][lower]};
  };

  // Anchor search, in deterministic index order: first a singleton edge,
  // then a vertex where two incident edges carry different pairs.
  std::optional<std::pair<std::uint32_t, Rational>> anchor;
  for (std::uint32_t x = 0; x < count && !anchor; ++x) {
    for (int k = 1; k <= n; ++k) {
      if (x & (1u << (k - 1))) continue;
      const EdgePair e = edge(x, k);
      if (*e.lo == *e.hi) {
        anchor = {x, *e.lo};
        break;
      }
    }
  }
  if (!anchor) {
    for (std::uint32_t x = 0; x < count && !anchor; ++x) {
      const EdgePair first = edge(x, 1);
      for (int k = 2; k <= n; ++k) {
        const EdgePair e = edge(x, k);
        if (*e.lo == *first.lo && *e.hi == *first.hi) continue;
        // Distinct two-element pairs meet in at most one value: f(x).
        if (*e.lo == *first.lo || *e.lo == *first.hi) {
          anchor = {x, *e.lo};
        } else if (*e.hi == *first.lo || *e.hi == *first.hi) {
          anchor = {x, *e.hi};
        } else {
          return InconsistencyWitness{InconsistencyWitness::Kind::EmptyIntersection, k, Point(n, x),
                                      "incident edges demand disjoint value pairs"};
        }
        break;
      }
    }
  }

  if (!anchor) {
    // Every edge carries one and the same two-element pair {u, v}: exactly
    // the two parity-alternating functions fit.
    const EdgePair e = edge(0, 1);
    return ParityPair{*e.lo, *e.hi};
  }

  // Breadth-first propagation over the cube graph from the anchor.
  std::vector<std::optional<Rational>> value(count);
  value[anchor->first] = anchor->second;
  std::deque<std::uint32_t> queue{anchor->first};
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    const Rational& vx = *value[x];
    for (int k = 1; k <= n; ++k) {
      const std::uint32_t y = x ^ (1u << (k - 1));
      const EdgePair e = edge(x, k);
      Rational vy;
      if (*e.lo == *e.hi) {
        if (!(vx == *e.lo)) {
          return InconsistencyWitness{InconsistencyWitness::Kind::PropagationConflict, k, Point(n, x),
                                      "edge pair excludes the propagated value"};
        }
        vy = *e.lo;
      } else if (vx == *e.lo) {
        vy = *e.hi;
      } else if (vx == *e.hi) {
        vy = *e.lo;
      } else {
        return InconsistencyWitness{InconsistencyWitness::Kind::PropagationConflict, k, Point(n, x),
                                    "edge pair excludes the propagated value"};
      }
      if (value[y]) {
        if (!(*value[y] == vy)) {
          return InconsistencyWitness{InconsistencyWitness::Kind::PropagationConflict, k, Point(n, y),
                                      "edge contradicts an already placed value"};
        }
      } else {
        value[y] = std::move(vy);
        queue.push_back(y);
      }
    }
  }

  std::vector<Rational> values;
  values.reserve(count);
  for (std::uint32_t x = 0; x < count; ++x) values.push_back(*value[x]);
  FunctionTable result(n, std::move(values));

  // Propagation only pins values along a spanning structure; the full
  // profile is the contract, so check all of it.
  for (int k = 1; k <= n; ++k) {
    const FunctionTable m = meet_derivative(result, k);
    const FunctionTable j = join_derivative(result, k);
    for (std::uint32_t x = 0; x < count; ++x) {
      if (!(m[x] == profile.meet[k - 1][x]) || !(j[x] == profile.join[k - 1][x])) {
        return InconsistencyWitness{InconsistencyWitness::Kind::VerificationMismatch, k, Point(n, x),
                                    "reconstructed table does not reproduce the profile"};
      }
    }
  }
  return result;
}

DerivativeProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("meet") || !j.contains("join")) {
    throw std::invalid_argument("profile JSON must be an object with \"arity\", \"meet\" and \"join\"");
  }
  DerivativeProfile p;
  p.arity = j.at("arity").get<int>();
  detail::check_arity(p.arity);
  const auto read_tables = [&](const nlohmann::json& arr, const char* what) {
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(p.arity)) {
      throw std::invalid_argument(std::string("profile JSON: \"") + what + "\" must hold one table per variable");
    }
    std::vector<FunctionTable> tables;
    for (const auto& entry : arr) {
      if (!entry.is_array() || entry.size() != (std::size_t{1} << p.arity)) {
        throw std::invalid_argument(std::string("profile JSON: each \"") + what +
                                    "\" table needs exactly 2^arity values");
      }
      std::vector<Rational> values;
      values.reserve(entry.size());
      for (const auto& v : entry) {
        values.push_back(v.is_string() ? Rational::from_string(v.get<std::string>()) : Rational(v.get<long>()));
      }
      tables.emplace_back(p.arity, std::move(values));
    }
    return tables;
  };
  p.meet = read_tables(j.at("meet"), "meet");
  p.join = read_tables(j.at("join"), "join");
  return p;
}

nlohmann::json profile_to_json(const DerivativeProfile& profile) {
  const auto dump = [](const std::vector<FunctionTable>& tables) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FunctionTable& t : tables) {
      nlohmann::json values = nlohmann::json::array();
      for (std::uint32_t x = 0; x < t.size(); ++x) values.push_back(t[x].str());
      arr.push_back(std::move(values));
    }
    return arr;
  };
  return nlohmann::json{{"arity", profile.arity}, {"meet", dump(profile.meet)}, {"join", dump(profile.join)}};
}

}  // namespace pbfa
