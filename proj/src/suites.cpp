#include "qplane/suites.hpp"

#include <chrono>
#include <random>
#include <set>

#include "qplane/ansatz.hpp"
#include "qplane/coalgebra.hpp"
#include "qplane/covariance.hpp"
#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"
#include "qplane/series_oracle.hpp"

namespace qplane {

const std::vector<RelationFixture>& relation_fixtures() {
  static const std::vector<RelationFixture> f = {
      {"LIE", "[X, Y] = h Y", "X*Y - Y*X - h*Y"},
      {"GAMMA", "[X, dX] = -h dX", "X*dX - dX*X + h*dX"},
      {"GAMMA", "[X, dY] = 0", "X*dY - dY*X"},
      {"GAMMA", "[Y, dX] = -h dY", "Y*dX - dX*Y + h*dY"},
      {"GAMMA", "[Y, dY] = (E - 1) dY Y", "Y*dY - dY*Y - (E - 1)*dY*Y"},
      {"GAMMA", "[dX, dY]_+ = 0", "dX*dY + dY*dX"},
      {"GAMMA", "dX^2 = 0", "dX^2"},
      {"GAMMA", "dY^2 = 0", "dY^2"},
      {"DERIV", "[pX, X] = h/(1 - E^-1) (1 + (E^-1 - 1) pX)", "pX*X - X*pX - h/(1 - E^-1)*(1 + (E^-1 - 1)*pX)"},
      {"DERIV", "[pX, Y] = 0", "pX*Y - Y*pX"},
      {"DERIV", "[pY, X] = 0", "pY*X - X*pY"},
      {"DERIV", "[pY, Y] = E + (1 - E)(pX - Y pY)", "pY*Y - Y*pY - E - (1 - E)*(pX - Y*pY)"},
      {"DERIV", "[pX, pY] = 0", "pX*pY - pY*pX"},
      {"DERIV", "[pX, dX] = (E - 1) dX pX - E dX", "pX*dX - dX*pX - (E - 1)*dX*pX + E*dX"},
      {"DERIV", "[pX, dY] = (E - 1) dY pX - E dY", "pX*dY - dY*pX - (E - 1)*dY*pX + E*dY"},
      {"DERIV", "[pY, dX] = 0", "pY*dX - dX*pY"},
      {"DERIV", "[pY, dY] = (E - 1) dY pY + (E - 1)^2/h dX pX + E (1 - E)/h dX",
       "pY*dY - dY*pY - (E - 1)*dY*pY - (E - 1)^2/h*dX*pX - E*(1 - E)/h*dX"},
      {"FORMS", "[w1, X] = h w1", "w1*X - X*w1 - h*w1"},
      {"FORMS", "[w1, Y] = (1 - E^-1) eXi w2", "w1*Y - Y*w1 - (1 - E^-1)*eXi*w2"},
      {"FORMS", "[w2, X] = 0", "w2*X - X*w2"},
      {"FORMS", "[w2, Y] = 0", "w2*Y - Y*w2"},
      {"FORMS", "w1 w2 = -E w2 w1", "w1*w2 + E*w2*w1"},
      {"FORMS", "w1^2 = 0", "w1^2"},
      {"FORMS", "w2^2 = 0", "w2^2"},
      {"VECT", "T2 T1 = E^-1 T1 T2 + T2", "T2*T1 - E^-1*T1*T2 - T2"},
      {"VECT_ACT", "[T1, X] = h/(1 - E^-1) (1 + (E^-1 - 1) T1)", "T1*X - X*T1 - h/(1 - E^-1)*(1 + (E^-1 - 1)*T1)"},
      {"VECT_ACT", "[T1, Y] = 0", "T1*Y - Y*T1"},
      {"VECT_ACT", "[T2, X] = 0", "T2*X - X*T2"},
      {"VECT_ACT", "[T2, Y] = eXi (1 + (E^-1 - 1) T1)", "T2*Y - Y*T2 - eXi*(1 + (E^-1 - 1)*T1)"},
      {"HN", "[H, N] = H", "H*N - N*H - H"},
  };
  return f;
}

CheckReport relation_suite() {
  CheckReport rep;
  rep.suite = "relations";
  std::set<std::string> seen;
  for (const auto& f : relation_fixtures()) {
    auto p = get_presentation(f.presentation);
    if (seen.insert(f.presentation).second)
      for (const auto& r : p->rule_records()) rep.add_rule(r);
    AlgElement nf = p->normalize(parse_element(f.text, *p));
    rep.expect(nf.is_zero(), f.presentation + ": " + f.name, f.text, nf.is_zero() ? "" : format(nf, *p));
  }
  return rep;
}

const std::vector<std::string>& confluent_presentations() {
  static const std::vector<std::string> names = {"LIE", "LIE_EXP", "GAMMA", "FORMS", "HN", "VECT"};
  return names;
}

CheckReport confluence_suite(int max_degree) {
  CheckReport rep;
  rep.suite = "confluence";
  for (const auto& name : confluent_presentations()) rep.absorb(check_confluence(*get_presentation(name), max_degree));
  for (const char* name : {"DERIV", "VECT_ACT"}) {
    auto c = check_confluence(*get_presentation(name), max_degree);
    for (const auto& r : c.rules) rep.add_rule(r);
    if (c.ok()) {
      rep.finding(c.suite + "/status", "locally confluent through degree " + std::to_string(max_degree));
      continue;
    }
    rep.finding(c.suite + "/status", std::to_string(c.count(Status::Fail)) + " unresolved overlaps through degree " +
                                         std::to_string(max_degree));
    for (const auto& ch : c.checks)
      if (ch.status == Status::Fail) rep.finding(c.suite + "/" + ch.id, ch.witness, ch.residual);
  }
  return rep;
}

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  static const Scalar pool[] = {Scalar(1),  Scalar(-1),        Scalar(2),         Scalar(-3),    Scalar(1) / 2,
                                Scalar::h(), Scalar::E(),      Scalar::E_inv(),   Scalar(7) / 3, Scalar::E() - 1,
                                Scalar::h() + 1, Scalar::E().pow(3)};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  std::uniform_int_distribution<int> op(0, 3), len(0, 2);
  Scalar s = pool[pick(rng)];
  for (int i = len(rng); i > 0; --i) {
    const Scalar& t = pool[pick(rng)];
    switch (op(rng)) {
      case 0: s += t; break;
      case 1: s -= t; break;
      case 2: s *= t; break;
      default: s /= t; break;
    }
  }
  return s.is_zero() ? Scalar(1) : s;
}

Word random_word(std::mt19937_64& rng, std::size_t letters, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters - 1);
  Word w;
  for (int n = len(rng); n > 0; --n) w.push_back(static_cast<char>(pick(rng)));
  return w;
}

AlgElement random_raw_element(std::mt19937_64& rng, const Presentation& p) {
  std::uniform_int_distribution<int> nterms(0, 4);
  AlgElement e;
  for (int n = nterms(rng); n > 0; --n) e.add(random_word(rng, p.alphabet().size(), 4), random_scalar(rng));
  return e;
}

TensorElement random_tensor(std::mt19937_64& rng, const Presentation& p) {
  std::uniform_int_distribution<int> nterms(1, 3);
  TensorElement t(2);
  for (int n = nterms(rng); n > 0; --n)
    t.add({random_word(rng, p.alphabet().size(), 3), random_word(rng, p.alphabet().size(), 3)}, random_scalar(rng));
  return t;
}

std::string mutate(std::mt19937_64& rng, std::string s) {
  static const std::string junk = "()*+-/^@ Z1hE$";
  std::uniform_int_distribution<std::size_t> pos(0, s.size()), pj(0, junk.size() - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::size_t at = pos(rng);
  switch (kind(rng)) {
    case 0: s.insert(s.begin() + static_cast<std::ptrdiff_t>(at), junk[pj(rng)]); break;
    case 1:
      if (at < s.size()) s.erase(at, 1);
      break;
    default: s = s.substr(0, at); break;
  }
  return s;
}

}  // namespace

CheckReport parser_suite(int per_presentation, std::uint64_t seed) {
  CheckReport rep;
  rep.suite = "parser";
  const auto& names = Catalog::instance().names();
  for (std::size_t idx = 0; idx < names.size(); ++idx) {
    const auto& name = names[idx];
    auto p = get_presentation(name);
    std::mt19937_64 rng(seed * 1000003 + idx);
    std::string bad_elem, bad_tensor, bad_span;
    int span_errors = 0;
    for (int i = 0; i < per_presentation; ++i) {
      AlgElement e = random_raw_element(rng, *p);
      std::string text = format(e, *p);
      AlgElement back;
      try {
        back = parse_element(text, *p);
      } catch (const std::exception& ex) {
        if (bad_elem.empty()) bad_elem = text + " (" + ex.what() + ")";
        continue;
      }
      if (!(back == e) && bad_elem.empty()) bad_elem = text + " reparses as " + format(back, *p);

      TensorElement t = random_tensor(rng, *p);
      std::string ttext = format(t, *p);
      try {
        auto tb = parse_tensor(ttext, *p);
        if (!(tb == t) && bad_tensor.empty()) bad_tensor = ttext + " reparses as " + format(tb, *p);
      } catch (const std::exception& ex) {
        if (bad_tensor.empty()) bad_tensor = ttext + " (" + ex.what() + ")";
      }

      std::string broken = mutate(rng, text);
      std::size_t off = 0, len = 0;
      bool threw = false;
      try {
        parse(broken, *p);
      } catch (const ParseError& ex) {
        threw = true;
        off = ex.offset;
        len = ex.length;
      } catch (const ForeignSymbol& ex) {
        threw = true;
        off = ex.offset;
        len = ex.length;
      }
      if (threw && (off > broken.size() || off + len > broken.size())) {
        ++span_errors;
        if (bad_span.empty()) bad_span = "'" + broken + "' span " + std::to_string(off) + "+" + std::to_string(len);
      }
    }
    std::string scope = std::to_string(per_presentation) + " seeded elements";
    rep.expect(bad_elem.empty(), name + ": round-trip(element)", scope, bad_elem);
    rep.expect(bad_tensor.empty(), name + ": round-trip(tensor)", scope, bad_tensor);
    rep.expect(span_errors == 0, name + ": error-spans", std::to_string(per_presentation) + " mutated inputs", bad_span);
  }

  // Documented fixtures.
  auto lie = get_presentation("LIE");
  auto forms = get_presentation("FORMS");
  auto fixture = [&](const std::string& id, auto&& fn) {
    try {
      auto [ok, got] = fn();
      rep.expect(ok, "fixture: " + id, got, ok ? "" : "got " + got);
    } catch (const std::exception& ex) {
      rep.fail("fixture: " + id, "", ex.what());
    }
  };
  fixture("X*Y - Y*X - h*Y is the Lie relation", [&] {
    auto nf = lie->normalize(parse_element("X*Y - Y*X - h*Y", *lie));
    return std::pair{nf.is_zero(), format(nf, *lie)};
  });
  fixture("w1*w2 + E*w2*w1 is a relation of the forms", [&] {
    auto nf = forms->normalize(parse_element("w1*w2 + E*w2*w1", *forms));
    return std::pair{nf.is_zero(), format(nf, *forms)};
  });
  fixture("Y @ eXi + 1 @ Y is the coproduct of Y", [&] {
    auto t = hopf_tables("LIE");
    auto parsed = parse_tensor("Y @ eXi + 1 @ Y", *t.presentation);
    auto d = coproduct(t.presentation->gen("Y"), t);
    return std::pair{parsed == d, format(parsed, *t.presentation)};
  });
  fixture("{Y*X: 1, Y: h} formats as Y*X + h*Y", [&] {
    AlgElement e;
    e.add(lie->word({"Y", "X"}), Scalar(1));
    e.add(lie->word({"Y"}), Scalar::h());
    auto s = format(e, *lie);
    return std::pair{s == "Y*X + h*Y", s};
  });
  fixture("zero formats as 0", [&] {
    auto s = format(AlgElement{}, *lie);
    return std::pair{s == "0", s};
  });
  fixture("coproduct of X formats as X @ 1 + 1 @ X", [&] {
    auto t = hopf_tables("LIE");
    auto s = format(coproduct(t.presentation->gen("X"), t), *t.presentation);
    return std::pair{s == "X @ 1 + 1 @ X", s};
  });
  fixture("X*Y normalizes to Y*X + h*Y", [&] {
    auto s = format(lie->normalize(parse_element("X*Y", *lie)), *lie);
    return std::pair{s == "Y*X + h*Y", s};
  });
  fixture("Z is a foreign symbol", [&] {
    try {
      parse_element("Z", *lie);
    } catch (const ForeignSymbol& ex) {
      return std::pair{ex.offset == 0 && ex.length == 1, std::string(ex.what())};
    }
    return std::pair{false, std::string("no error")};
  });
  return rep;
}

CheckReport merge_reports(const std::string& suite, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.suite = suite;
  for (const auto& p : parts) {
    r.absorb(p);
    r.timing_ms += p.timing_ms;
  }
  return r;
}

std::vector<CheckReport> check_all(const CheckAllOptions& opts) {
  std::vector<CheckReport> out;
  auto timed = [&](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = fn();
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  };
  timed([] { return relation_suite(); });
  timed([] {
    auto r = consistency_derivation();
    r.suite = "consistency";
    return r;
  });
  timed([] { return confluence_suite(4); });
  timed([&] {
    std::vector<CheckReport> parts;
    for (const char* name : {"LIE", "FORMS", "VECT", "HN"}) parts.push_back(hopf_suite(name, opts.hopf_samples, opts.seed));
    return merge_reports("hopf", parts);
  });
  timed([&] {
    auto r = covariance_suite(true, true, opts.covariance_samples, opts.seed);
    r.suite = "covariance";
    return r;
  });
  timed([&] {
    auto r = graded_hopf_gamma(true, opts.covariance_samples, opts.seed);
    r.suite = "gamma-hopf";
    return r;
  });
  timed([] { return ansatz_suite(); });
  timed([&] {
    auto r = run_oracle_suite(opts.oracle_cutoff);
    r.suite = "oracle";
    return r;
  });
  timed([&] { return parser_suite(opts.parser_samples, opts.seed); });
  return out;
}

}  // namespace qplane
