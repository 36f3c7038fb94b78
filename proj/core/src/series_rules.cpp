#include "weyl/series_rules.hpp"

#include "weyl/orbits.hpp"

namespace weyl {

namespace {

/// Positional shapes the symbolic rules are written in. On a rank-2 factor
/// of type B, Second means twice the short fundamental weight (the pattern
/// denotes the same Euclidean point at every rank, and B2's short
/// fundamental weight is half of it), so it instantiates as (0,2v).
enum class Pat { Zero, First, Second, Last, SecondLast, FirstLast };

Weight make_pattern(const Simple& factor, Pat pat, const Rat& v) {
  int r = factor.rank;
  Weight w(r, Rat(0));
  switch (pat) {
    case Pat::Zero:
      break;
    case Pat::First:
      w[0] = v;
      break;
    case Pat::Second:
      if (r < 2) throw Error("Second pattern needs rank >= 2");
      if (factor.family == Family::B && r == 2) {
        w[1] = v + v;
      } else {
        w[1] = v;
      }
      break;
    case Pat::Last:
      w[r - 1] = v;
      break;
    case Pat::SecondLast:
      if (r < 2) throw Error("SecondLast pattern needs rank >= 2");
      w[r - 2] = v;
      break;
    case Pat::FirstLast:
      if (r < 2) throw Error("FirstLast pattern needs rank >= 2");
      w[0] = v;
      w[r - 1] = v;
      break;
  }
  return w;
}

class RuleBuilder {
 public:
  RuleBuilder(const ProductAlgebra& target) : target_(target) {}

  /// Adds one term: a pattern/value per simple factor in order, then the
  /// U1 label values (in order) for the U1 factors.
  RuleBuilder& term(std::vector<std::pair<Pat, Rat>> simple_parts,
                    std::vector<Rat> u1_labels = {}, long long mult = 1) {
    BranchEntry e;
    size_t si = 0, ui = 0;
    for (const Simple& f : target_.factors()) {
      if (f.is_u1()) {
        if (ui >= u1_labels.size()) throw Error("missing U1 label in rule");
        e.factors.push_back({u1_labels[ui++]});
      } else {
        if (si >= simple_parts.size()) throw Error("missing factor pattern in rule");
        auto [pat, v] = simple_parts[si++];
        e.factors.push_back(make_pattern(f, pat, v));
      }
    }
    e.multiplicity = mult;
    entries_.push_back(std::move(e));
    return *this;
  }

  /// A term whose single factor holds an explicit value at a 1-based
  /// position (for the A-type ladders of the A x U1 families).
  RuleBuilder& term_at(int pos, const Rat& value, const Rat& u1_label) {
    const Simple& f = target_.factors()[0];
    Weight w(f.rank, Rat(0));
    if (pos < 1 || pos > f.rank) throw Error("rule position out of range");
    w[pos - 1] = value;
    entries_.push_back({{w, {u1_label}}, 1});
    return *this;
  }

  std::vector<BranchEntry> take() { return std::move(entries_); }

 private:
  const ProductAlgebra& target_;
  std::vector<BranchEntry> entries_;
};

}  // namespace

Weight series_probe_weight(const SeriesKey& key, SeriesProbe probe,
                           const Rat& param) {
  check_series_key(key);
  int n = key.n;
  Weight w(n, Rat(0));
  switch (probe) {
    case SeriesProbe::First:
      w[0] = param;
      break;
    case SeriesProbe::Second:
      if (n < 3) {
        throw Error("the (0,b,0,...,0) probe needs source rank >= 3");
      }
      w[1] = param;
      break;
    case SeriesProbe::Last:
      w[n - 1] = param;
      break;
  }
  return w;
}

BranchingResult evaluate_series_rule(const SeriesKey& key, SeriesProbe probe,
                                     const Rat& param) {
  check_series_key(key);
  if (!(param > Rat(0))) throw Error("series rules need a positive parameter");
  ProjectionMap map = series_matrix(key);  // for source/target shape only
  const Rat& v = param;
  Rat two_v = v + v;
  int n = key.n;

  Weight dominant = series_probe_weight(key, probe, param);
  unsigned long long source_size =
      orbit_size(ProductAlgebra(map.source), dominant);
  RuleBuilder rule(map.target);

  auto unsupported = [&]() -> Error {
    return Error("the family " + std::string(series_name(key.id)) +
                 " states no rule for this probe");
  };

  using P = Pat;
  switch (key.id) {
    case SeriesId::BtoBU1:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}}, {Rat(0)})
              .term({{P::Zero, v}}, {two_v})
              .term({{P::Zero, v}}, {-two_v});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}}, {Rat(0)})
              .term({{P::First, v}}, {two_v})
              .term({{P::First, v}}, {-two_v});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}}, {v}).term({{P::Last, v}}, {-v});
          break;
      }
      break;

    case SeriesId::BtoD:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}}).term({{P::SecondLast, v}});
          break;
      }
      break;

    case SeriesId::BtoDA1:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, two_v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, two_v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::First, v}})
              .term({{P::SecondLast, v}, {P::First, v}});
          break;
      }
      break;

    case SeriesId::BtoB2A1:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, v}, {P::First, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, v}, {P::First, v}})
              .term({{P::Zero, v}, {P::First, two_v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::Zero, v}, {P::First, two_v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::First, v}, {P::Zero, v}})
              .term({{P::Last, v}, {P::Zero, v}, {P::First, v}});
          break;
      }
      break;

    case SeriesId::BtoBA3:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::Second, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::Second, v}})
              .term({{P::Zero, v}, {P::FirstLast, v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::First, v}})
              .term({{P::Last, v}, {P::Last, v}});
          break;
      }
      break;

    case SeriesId::BtoBD:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, v}})
              .term({{P::Zero, v}, {P::Second, v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::Last, v}})
              .term({{P::Last, v}, {P::SecondLast, v}});
          break;
      }
      break;

    case SeriesId::BtoDB:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, v}})
              .term({{P::Zero, v}, {P::Second, v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::Last, v}})
              .term({{P::SecondLast, v}, {P::Last, v}});
          break;
      }
      break;

    case SeriesId::BtoA1: {
      if (probe != SeriesProbe::First) throw unsupported();
      for (int i = n; i >= 1; --i) {
        rule.term({{P::First, Rat(2 * i) * v}});
      }
      break;
    }

    case SeriesId::CtoAU1: {
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}}, {v}).term({{P::Last, v}}, {-v});
          break;
        case SeriesProbe::Second:
          rule.term({{P::FirstLast, v}}, {Rat(0)})
              .term({{P::Second, v}}, {two_v})
              .term({{P::SecondLast, v}}, {-two_v});
          break;
        case SeriesProbe::Last:
          if (n % 2 == 0) {
            int m = n / 2;
            rule.term_at(m, two_v, Rat(0));
            for (int j = 1; j <= m - 1; ++j) {
              Rat label = Rat(2 * j) * v;
              rule.term_at(m + j, two_v, label);
              rule.term_at(m - j, two_v, -label);
            }
            Rat edge = Rat(2 * m) * v;
            rule.term({{P::Zero, v}}, {edge}).term({{P::Zero, v}}, {-edge});
          } else {
            int m = (n - 1) / 2;
            for (int j = 0; j <= m - 1; ++j) {
              Rat label = Rat(2 * j + 1) * v;
              rule.term_at(m + 1 + j, two_v, label);
              rule.term_at(m - j, two_v, -label);
            }
            Rat edge = Rat(2 * m + 1) * v;
            rule.term({{P::Zero, v}}, {edge}).term({{P::Zero, v}}, {-edge});
          }
          break;
      }
      break;
    }

    case SeriesId::CtoCA1:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::First, v}});
          break;
      }
      break;

    case SeriesId::CtoCC:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, v}})
              .term({{P::Zero, v}, {P::Second, v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::Last, v}});
          break;
      }
      break;

    case SeriesId::CtoA1: {
      if (probe != SeriesProbe::First) throw unsupported();
      for (int i = n; i >= 1; --i) {
        rule.term({{P::First, Rat(2 * i - 1) * v}});
      }
      break;
    }

    case SeriesId::DtoAU1: {
      bool even = n % 2 == 0;
      switch (probe) {
        case SeriesProbe::First:
          if (even) {
            rule.term({{P::First, v}}, {v}).term({{P::Last, v}}, {-v});
          } else {
            rule.term({{P::First, v}}, {two_v}).term({{P::Last, v}}, {-two_v});
          }
          break;
        case SeriesProbe::Second: {
          Rat label = even ? two_v : two_v + two_v;
          rule.term({{P::FirstLast, v}}, {Rat(0)})
              .term({{P::Second, v}}, {label})
              .term({{P::SecondLast, v}}, {-label});
          break;
        }
        case SeriesProbe::Last:
          if (even) {
            int m = n / 2;
            rule.term_at(m, v, Rat(0));
            for (int j = 1; m + 2 * j <= 2 * m - 1; ++j) {
              Rat label = Rat(2 * j) * v;
              rule.term_at(m + 2 * j, v, label);
              rule.term_at(m - 2 * j, v, -label);
            }
            if (m % 2 == 0) {
              Rat edge = Rat(m) * v;
              rule.term({{P::Zero, v}}, {edge}).term({{P::Zero, v}}, {-edge});
            }
          } else {
            int m = (n - 1) / 2;
            for (int t = 0; t <= m - 1; ++t) {
              Rat label = Rat(2 * t + 1) * v;
              if (t % 2 == 0) {
                rule.term_at(m + 1 + t, v, label);
              } else {
                rule.term_at(m - t, v, -label);
              }
            }
            Rat edge = Rat(2 * m + 1) * v;
            rule.term({{P::Zero, v}}, {(m % 2 == 0) ? edge : -edge});
          }
          break;
      }
      break;
    }

    case SeriesId::DtoDU1:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}}, {Rat(0)})
              .term({{P::Zero, v}}, {two_v})
              .term({{P::Zero, v}}, {-two_v});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}}, {Rat(0)})
              .term({{P::First, v}}, {two_v})
              .term({{P::First, v}}, {-two_v});
          break;
        case SeriesProbe::Last:
          rule.term({{P::SecondLast, v}}, {v}).term({{P::Last, v}}, {-v});
          break;
      }
      break;

    case SeriesId::DtoB:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}}).term({{P::Zero, v}}, {}, 2);
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}}).term({{P::First, v}}, {}, 2);
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}});
          break;
      }
      break;

    case SeriesId::DtoBA1:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, two_v}})
              .term({{P::Zero, v}, {P::Zero, v}}, {}, 2);
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, two_v}})
              .term({{P::First, v}, {P::Zero, v}}, {}, 2)
              .term({{P::Zero, v}, {P::First, two_v}}, {}, 2);
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::First, v}});
          break;
      }
      break;

    case SeriesId::DtoBB:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, v}})
              .term({{P::Zero, v}, {P::Zero, v}}, {}, 2);
          break;
        case SeriesProbe::Second:
          rule.term({{P::First, v}, {P::First, v}})
              .term({{P::Second, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::Second, v}})
              .term({{P::First, v}, {P::Zero, v}}, {}, 2)
              .term({{P::Zero, v}, {P::First, v}}, {}, 2);
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::Last, v}});
          break;
      }
      break;

    case SeriesId::DtoD2A1:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, v}, {P::First, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, v}, {P::First, v}})
              .term({{P::Zero, v}, {P::First, two_v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::Zero, v}, {P::First, two_v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::First, v}, {P::Zero, v}})
              .term({{P::SecondLast, v}, {P::Zero, v}, {P::First, v}});
          break;
      }
      break;

    case SeriesId::DtoDA3:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::Second, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::Second, v}})
              .term({{P::Zero, v}, {P::FirstLast, v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::Last, v}})
              .term({{P::SecondLast, v}, {P::First, v}});
          break;
      }
      break;

    case SeriesId::DtoDD:
      switch (probe) {
        case SeriesProbe::First:
          rule.term({{P::First, v}, {P::Zero, v}})
              .term({{P::Zero, v}, {P::First, v}});
          break;
        case SeriesProbe::Second:
          rule.term({{P::Second, v}, {P::Zero, v}})
              .term({{P::First, v}, {P::First, v}})
              .term({{P::Zero, v}, {P::Second, v}});
          break;
        case SeriesProbe::Last:
          rule.term({{P::Last, v}, {P::Last, v}})
              .term({{P::SecondLast, v}, {P::SecondLast, v}});
          break;
      }
      break;
  }

  return make_branching_result(map.source, map.target, dominant, source_size,
                               rule.take());
}

}  // namespace weyl
