#include "nsring/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "nsring/ci3.hpp"
#include "nsring/family.hpp"
#include "nsring/index.hpp"
#include "nsring/json_io.hpp"
#include "nsring/kernels.hpp"
#include "nsring/parallel.hpp"
#include "nsring/sweeps.hpp"

namespace nsring {

namespace {

int exit_code_for(errc c) {
  switch (c) {
  case errc::not_gorenstein:
  case errc::wrong_edim:
  case errc::not_ci_edim3:
  case errc::invalid_structure:
    return 3;
  case errc::too_large:
    return 4;
  default:
    return 2;
  }
}

void print_error(std::ostream& err, const std::string& code,
                 const std::string& message) {
  err << json{{"error", json{{"code", code}, {"message", message}}}}.dump()
      << "\n";
}

int64_t parse_int(std::string_view text, const std::string& what) {
  int64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    fail(errc::invalid_argument, "cannot parse " + what + " from '" +
                                     std::string(text) + "'");
  return v;
}

std::vector<int64_t> parse_generator_list(const std::string& text) {
  std::vector<int64_t> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string_view tok(text.data() + pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(parse_int(tok, "generator"));
    pos = comma + 1;
  }
  if (out.empty()) fail(errc::invalid_argument, "no generators given");
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(errc::invalid_argument,
         "cannot parse JSON from '" + path + "': " + e.what());
  }
}

std::vector<int64_t> load_generators(const std::string& positional,
                                     const std::string& file) {
  if (!file.empty()) {
    json j = read_json_file(file);
    if (!j.is_array())
      fail(errc::invalid_argument, "'" + file + "' must hold a JSON array");
    try {
      return j.get<std::vector<int64_t>>();
    } catch (const json::exception& e) {
      fail(errc::invalid_argument, std::string("bad generator array: ") + e.what());
    }
  }
  if (positional.empty())
    fail(errc::invalid_argument, "no generators given (positional or --file)");
  return parse_generator_list(positional);
}

struct Range {
  int64_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const std::string& what) {
  size_t dots = text.find("..");
  if (dots == std::string::npos) {
    int64_t v = parse_int(text, what);
    return Range{v, v};
  }
  Range r{parse_int(text.substr(0, dots), what),
          parse_int(text.substr(dots + 2), what)};
  if (r.lo > r.hi) fail(errc::invalid_argument, "empty range for " + what);
  return r;
}

std::string join64(const std::vector<int64_t>& v, char sep = ' ') {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string flatten_pairs(const std::vector<std::pair<int64_t, int64_t>>& nv) {
  std::string s;
  for (size_t i = 0; i < nv.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(nv[i].first) + ":" + std::to_string(nv[i].second);
  }
  return s;
}

std::string yesno(bool b) { return b ? "true" : "false"; }

// ------------------------------------------------------------------ analyze

int cmd_analyze(const std::vector<int64_t>& raw, const std::string& format,
                std::ostream& out) {
  auto h = NumericalSemigroup::from_generators(raw);
  AperyTable ap = h.apery_set(h.multiplicity());

  if (format == "json") {
    json j{{"input_generators", raw},
           {"generators", h.generators()},
           {"removed_redundant", h.removed_redundant()},
           {"edim", h.edim()},
           {"mult", h.multiplicity()},
           {"frobenius", h.frobenius()},
           {"gap_count", h.genus()},
           {"gorenstein", h.is_symmetric()},
           {"apery_of_mult", to_json(ap)}};
    out << j.dump() << "\n";
    return 0;
  }
  if (format == "csv") {
    std::string apery;
    for (auto [w, o] : ap.sorted()) {
      if (!apery.empty()) apery += ' ';
      apery += std::to_string(w) + ":" + std::to_string(o);
    }
    out << "generators,removed_redundant,edim,mult,frobenius,gap_count,"
           "gorenstein,apery_of_mult\n";
    out << csv_quote(join64(h.generators())) << ','
        << csv_quote(join64(h.removed_redundant())) << ',' << h.edim() << ','
        << h.multiplicity() << ',' << h.frobenius() << ',' << h.genus() << ','
        << yesno(h.is_symmetric()) << ',' << csv_quote(apery) << "\n";
    return 0;
  }
  out << "generators: " << join64(h.generators()) << "\n";
  if (!h.removed_redundant().empty())
    out << "removed redundant: " << join64(h.removed_redundant()) << "\n";
  out << "edim: " << h.edim() << "\nmult: " << h.multiplicity()
      << "\nfrobenius: " << h.frobenius() << "\ngaps: " << h.genus()
      << "\ngorenstein: " << yesno(h.is_symmetric()) << "\n";
  out << "apery(" << h.multiplicity() << "):";
  for (auto [w, o] : ap.sorted()) out << ' ' << w << "(ord " << o << ")";
  out << "\n";
  return 0;
}

// -------------------------------------------------------------------- index

int cmd_index(const std::vector<int64_t>& raw, const std::string& method,
              const std::string& format, std::ostream& out) {
  auto h = NumericalSemigroup::from_generators(raw);
  IndexReport rep = index_report(h, parse_method(method));

  if (format == "json") {
    out << to_json(rep).dump() << "\n";
    return 0;
  }
  if (format == "csv") {
    out << "generators,n_values,index,mult,edim,codim,ding_gap,gorenstein,"
           "method\n";
    out << csv_quote(join64(rep.generators)) << ','
        << csv_quote(flatten_pairs(rep.n_values)) << ',' << rep.index << ','
        << rep.mult << ',' << rep.edim << ',' << rep.codim << ','
        << rep.ding_gap << ',' << yesno(rep.gorenstein) << ',' << rep.method
        << "\n";
    return 0;
  }
  out << "generators: " << join64(rep.generators) << "\n";
  out << "n_values:";
  for (const auto& [g, n] : rep.n_values) out << " N_" << g << "=" << n;
  out << "\nindex: " << rep.index << "\nmult: " << rep.mult
      << "\nedim: " << rep.edim << "\ncodim: " << rep.codim
      << "\nding_gap: " << rep.ding_gap
      << "\ngorenstein: " << yesno(rep.gorenstein)
      << "\nmethod: " << rep.method << "\n";
  if (rep.loewy_length)
    out << "note: generalized Loewy length = index = " << *rep.loewy_length
        << "\n";
  else
    out << "note: ding_gap bound is guaranteed only for Gorenstein rings\n";
  if (rep.index == rep.mult)
    out << "note: index = mult, the ring is a hypersurface\n";
  return 0;
}

// ---------------------------------------------------------------------- ci3

int cmd_ci3(const std::vector<int64_t>& raw, const std::string& format,
            std::ostream& out) {
  auto h = NumericalSemigroup::from_generators(raw);
  auto structures = detect_ci3(h);
  if (structures.empty())
    fail(errc::not_ci_edim3,
         "no complete-intersection decomposition: the semigroup is not "
         "Gorenstein");
  IndexReport rep = index_ci3(h);
  int64_t f = frobenius_ci3(structures.front());

  if (format == "json") {
    json js = json::array();
    for (const auto& s : structures) js.push_back(to_json(s));
    out << json{{"generators", h.generators()},
                {"structures", std::move(js)},
                {"frobenius", f},
                {"report", to_json(rep)}}
               .dump()
        << "\n";
    return 0;
  }
  if (format == "csv") {
    out << "generators,a,b,c,p,x,y,a_prime,a_dprime,frobenius,index\n";
    for (const auto& s : structures)
      out << csv_quote(join64(h.generators())) << ',' << s.a << ',' << s.b
          << ',' << s.c << ',' << s.p << ',' << s.x << ',' << s.y << ','
          << s.a_prime << ',' << s.a_dprime << ',' << frobenius_ci3(s) << ','
          << rep.index << "\n";
    return 0;
  }
  out << "generators: " << join64(h.generators()) << "\n";
  for (const auto& s : structures)
    out << "structure: a=" << s.a << " b=" << s.b << "(=p*x) c=" << s.c
        << "(=p*y) p=" << s.p << " x=" << s.x << " y=" << s.y
        << " a'=" << s.a_prime << " a''=" << s.a_dprime << "\n";
  out << "frobenius: " << f << "\n";
  out << "index: " << rep.index << " (N:";
  for (const auto& [g, n] : rep.n_values) out << " " << g << ":" << n;
  out << ")\nding_gap: " << rep.ding_gap << "\n";
  return 0;
}

// --------------------------------------------------------------------- glue

int cmd_glue(const GluingStep& step, const std::string& format,
             std::ostream& out) {
  auto base = NumericalSemigroup::from_generators(step.base_generators);
  NumericalSemigroup glued = glue(base, step.a, step.p);
  int64_t f = glued.frobenius();

  if (format == "json") {
    out << json{{"step", to_json(step)},
                {"generators", glued.generators()},
                {"frobenius", f}}
               .dump()
        << "\n";
    return 0;
  }
  if (format == "csv") {
    out << "base,a,p,generators,frobenius\n";
    out << csv_quote(join64(step.base_generators)) << ',' << step.a << ','
        << step.p << ',' << csv_quote(join64(glued.generators())) << ',' << f
        << "\n";
    return 0;
  }
  out << "glued: " << join64(glued.generators()) << "\nfrobenius: " << f
      << "\n";
  return 0;
}

// ------------------------------------------------------------------- family

struct FamilyRow {
  FamilySpec spec;
  json row;
  std::string human;
  std::string csv;
};

FamilyRow family_row(const FamilySpec& spec) {
  FamilyRow r;
  r.spec = spec;
  NumericalSemigroup h = spec.kind == FamilyKind::watanabe_hna
                             ? build_hna(spec.n, spec.a)
                             : build_ding_family_3gen(spec.n).semigroup;
  int64_t expected_index, expected_gap;
  if (spec.kind == FamilyKind::watanabe_hna) {
    HnaExpectation e = expected_index_hna(spec.n, spec.a);
    expected_index = e.index;
    expected_gap = e.ding_gap;
  } else {
    DingFamilyInstance inst = build_ding_family_3gen(spec.n);
    expected_index = inst.expected_index;
    expected_gap = inst.expected_ding_gap;
  }
  IndexReport rep = index_report(h);
  r.row = json{{"spec", to_json(spec)},
               {"generators", h.generators()},
               {"frobenius", h.frobenius()},
               {"expected_index", expected_index},
               {"expected_ding_gap", expected_gap},
               {"report", to_json(rep)}};
  std::ostringstream hline;
  hline << (spec.kind == FamilyKind::watanabe_hna ? "hna" : "ding3")
        << " n=" << spec.n;
  if (spec.kind == FamilyKind::watanabe_hna) hline << " a=" << spec.a;
  hline << ": <" << join64(h.generators()) << "> f=" << h.frobenius()
        << " index=" << rep.index << " (expected " << expected_index
        << ") gap=" << rep.ding_gap << " (expected " << expected_gap << ")";
  r.human = hline.str();
  std::ostringstream cline;
  cline << (spec.kind == FamilyKind::watanabe_hna ? "watanabe-hna"
                                                  : "ding-gap-3gen")
        << ',' << spec.n << ','
        << (spec.kind == FamilyKind::watanabe_hna ? std::to_string(spec.a)
                                                  : std::string())
        << ',' << csv_quote(join64(h.generators())) << ',' << h.frobenius()
        << ',' << rep.index << ',' << expected_index << ',' << rep.ding_gap
        << ',' << expected_gap << ',' << rep.method;
  r.csv = cline.str();
  return r;
}

int cmd_family(const std::vector<FamilySpec>& specs, const std::string& format,
               int jobs, std::ostream& out) {
  std::vector<FamilyRow> rows(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  parallel_for(static_cast<int64_t>(specs.size()), jobs, [&](int64_t i) {
    try {
      rows[static_cast<size_t>(i)] = family_row(specs[static_cast<size_t>(i)]);
    } catch (...) {
      errors[static_cast<size_t>(i)] = std::current_exception();
    }
  });
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (format == "csv")
    out << "kind,n,a,generators,frobenius,index,expected_index,ding_gap,"
           "expected_ding_gap,method\n";
  for (const auto& r : rows) {
    if (format == "json")
      out << r.row.dump() << "\n"; // JSON lines, one instance per line
    else if (format == "csv")
      out << r.csv << "\n";
    else
      out << r.human << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::vector<std::string>& suites, int count, int chains,
               int pairs, int hna_n, int64_t hna_a, int64_t ding_n, int depth,
               int64_t f_cap, uint64_t seed, int jobs,
               const std::string& fault, const std::string& format,
               std::ostream& out) {
  SweepOptions opts;
  opts.seed = seed;
  opts.jobs = jobs;
  if (fault == "n-formula-b")
    opts.fault = Fault::n_formula_b_off_by_one;
  else if (fault != "none")
    fail(errc::invalid_argument, "unknown fault '" + fault + "'");

  auto want = [&](const char* name) {
    for (const auto& s : suites)
      if (s == "all" || s == name) return true;
    return false;
  };

  std::vector<SweepResult> results;
  if (want("main-theorem")) results.push_back(sweep_main_theorem(count, opts));
  if (want("shen-bryant"))
    results.push_back(sweep_shen_bryant(chains, opts, depth, f_cap));
  if (want("gluing-frobenius"))
    results.push_back(sweep_gluing_frobenius(chains, opts, f_cap));
  if (want("hypersurface"))
    results.push_back(sweep_hypersurface(pairs, opts));
  if (want("hna")) results.push_back(sweep_hna(hna_n, hna_a, opts));
  if (want("ding-family")) results.push_back(sweep_ding_family(ding_n, opts));
  if (want("apery-symmetry"))
    results.push_back(sweep_apery_symmetry(chains, opts, depth, f_cap));
  if (want("ding-nonneg")) results.push_back(sweep_ding_nonneg(chains, opts));
  if (results.empty())
    fail(errc::invalid_argument, "no such suite");

  bool all_ok = true;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back(json{{"name", r.name},
                         {"total", r.total},
                         {"failed", r.failed},
                         {"first_counterexample", r.first_counterexample}});
      all_ok = all_ok && r.ok();
    }
    out << arr.dump() << "\n";
  } else if (format == "csv") {
    out << "name,total,failed\n";
    for (const auto& r : results) {
      out << r.name << ',' << r.total << ',' << r.failed << "\n";
      all_ok = all_ok && r.ok();
    }
  } else {
    for (const auto& r : results) {
      out << r.name << ": " << (r.total - r.failed) << "/" << r.total
          << (r.ok() ? " ok" : " FAIL") << "\n";
      if (!r.ok())
        out << "first counterexample: " << r.first_counterexample.dump()
            << "\n";
      all_ok = all_ok && r.ok();
    }
  }
  return all_ok ? 0 : 1;
}

// ----------------------------------------------------------- paper-examples

struct ExampleRow {
  std::string claim;
  std::string expected;
  std::string computed;
  bool match;
};

std::vector<ExampleRow> example_rows() {
  std::vector<ExampleRow> rows;
  auto add = [&](const std::string& claim, const std::string& expected,
                 const std::function<std::pair<std::string, bool>()>& run) {
    try {
      auto [computed, ok] = run();
      rows.push_back({claim, expected, computed, ok});
    } catch (const std::exception& e) {
      rows.push_back({claim, expected, std::string("error: ") + e.what(), false});
    }
  };
  auto num = [](int64_t v) { return std::to_string(v); };

  auto h4511 = NumericalSemigroup::from_generators({4, 5, 11});
  add("f(<4,5,11>) = 7", "7", [&] {
    return std::pair(num(h4511.frobenius()), h4511.frobenius() == 7);
  });
  add("10 lies in <4,5,11>", "true", [&] {
    bool b = h4511.contains(10);
    return std::pair(yesno(b), b);
  });
  add("7 is a gap of <4,5,11>", "true", [&] {
    bool b = !h4511.contains(7);
    return std::pair(yesno(b), b);
  });
  add("<4,5,11> is not symmetric", "false", [&] {
    bool b = h4511.is_symmetric();
    return std::pair(yesno(b), !b);
  });
  add("ord(11) = 1 in <4,5,11>", "1", [&] {
    return std::pair(num(h4511.order(11)), h4511.order(11) == 1);
  });
  add("N_4(<4,5,11>) = 3 differs from ord(f+4)+1 = 2", "3 vs 2", [&] {
    int64_t na = n_value_apery(h4511, 4);
    int64_t of = h4511.order(11) + 1;
    return std::pair(num(na) + " vs " + num(of),
                     na == 3 && of == 2 && na != of);
  });
  add("ord formula refuses non-Gorenstein <4,5,11>", "NotGorenstein", [&] {
    try {
      n_value_ord_formula(h4511, 4);
      return std::pair(std::string("no error"), false);
    } catch (const Error& e) {
      return std::pair(std::string(e.code_name()),
                       e.code() == errc::not_gorenstein);
    }
  });

  auto h82745 = NumericalSemigroup::from_generators({8, 27, 45});
  add("<8,27,45> decomposes as a=8, p=9, x=3, y=5", "a=8 p=9 x=3 y=5", [&] {
    auto st = detect_ci3(h82745);
    if (st.size() != 1) return std::pair(std::string("none"), false);
    const auto& s = st.front();
    std::string got = "a=" + num(s.a) + " p=" + num(s.p) + " x=" + num(s.x) +
                      " y=" + num(s.y);
    return std::pair(got, s.a == 8 && s.p == 9 && s.x == 3 && s.y == 5 &&
                              s.a_prime == 1 && s.a_dprime == 1);
  });
  add("f(<8,27,45>) = 127 by formula and by table", "127 = 127", [&] {
    int64_t ff = frobenius_ci3(detect_ci3(h82745).front());
    int64_t ft = h82745.frobenius();
    return std::pair(num(ff) + " = " + num(ft), ff == 127 && ft == 127);
  });
  add("index(<8,27,45>) = 6 = min{2n+2, 6n-1} at n=2", "6", [&] {
    int64_t by_ci3 = index_ci3(h82745).index;
    int64_t by_apery = index_report(h82745, IndexMethod::apery_oracle).index;
    return std::pair(num(by_ci3), by_ci3 == 6 && by_apery == 6);
  });
  add("ding gap(<8,27,45>) = 1 = 2n-3 at n=2", "1", [&] {
    int64_t g = index_ci3(h82745).ding_gap;
    return std::pair(num(g), g == 1);
  });

  for (int64_t n = 3; n <= 6; ++n) {
    add("ding family n=" + num(n) + ": index = " + num(2 * n + 2) +
            ", gap = " + num(2 * n - 3),
        num(2 * n + 2) + ", " + num(2 * n - 3), [n, &num] {
          DingFamilyInstance inst = build_ding_family_3gen(n);
          IndexReport rep = index_ci3(inst.semigroup);
          return std::pair(num(rep.index) + ", " + num(rep.ding_gap),
                           rep.index == 2 * n + 2 && rep.ding_gap == 2 * n - 3);
        });
  }

  add("index(<2,3>) = mult = 2 with gap 0 (hypersurface)", "2, 0", [&] {
    auto h = NumericalSemigroup::from_generators({2, 3});
    IndexReport rep = index_report(h, IndexMethod::apery_oracle);
    return std::pair(num(rep.index) + ", " + num(rep.ding_gap),
                     rep.index == 2 && rep.mult == 2 && rep.ding_gap == 0);
  });
  add("index(<1>) = 1 (regular)", "1", [&] {
    auto h = NumericalSemigroup::from_generators({1});
    IndexReport rep = index_report(h, IndexMethod::apery_oracle);
    return std::pair(num(rep.index), rep.index == 1);
  });

  add("H_{2,1} = <4,5,6> with f = 7", "<4 5 6>, f=7", [&] {
    NumericalSemigroup h = build_hna(2, 1);
    return std::pair("<" + join64(h.generators()) + ">, f=" + num(h.frobenius()),
                     h.generators() == std::vector<int64_t>{4, 5, 6} &&
                         h.frobenius() == 7 && frobenius_hna(2, 1) == 7);
  });
  add("index(H_{2,1}) = 3 with N_4 = 3", "3, 3", [&] {
    NumericalSemigroup h = build_hna(2, 1);
    int64_t idx = index_report(h, IndexMethod::ord_formula).index;
    int64_t n4 = n_value_ord_formula(h, 4);
    return std::pair(num(idx) + ", " + num(n4), idx == 3 && n4 == 3);
  });
  add("f(H_{2,3}) = 13 by formula and by table", "13 = 13", [&] {
    int64_t ff = frobenius_hna(2, 3);
    auto fresh = NumericalSemigroup::from_generators({4, 7, 10});
    return std::pair(num(ff) + " = " + num(fresh.frobenius()),
                     ff == 13 && fresh.frobenius() == 13);
  });
  add("index(H_{3,5}) = 4 with ding gap 2", "4, 2", [&] {
    NumericalSemigroup h = build_hna(3, 5);
    IndexReport rep = index_report(h, IndexMethod::apery_oracle);
    return std::pair(num(rep.index) + ", " + num(rep.ding_gap),
                     rep.index == 4 && rep.ding_gap == 2);
  });
  add("H_{3,1} ding gap = 2^3 - 6 = 2", "2", [&] {
    IndexReport rep =
        index_report(build_hna(3, 1), IndexMethod::apery_oracle);
    return std::pair(num(rep.ding_gap), rep.ding_gap == 2);
  });
  add("index(H_{1,9}) = index(<2,11>) = 2 = mult", "2", [&] {
    NumericalSemigroup h = build_hna(1, 9);
    IndexReport rep = index_report(h, IndexMethod::apery_oracle);
    return std::pair(num(rep.index),
                     rep.index == 2 && rep.mult == 2 &&
                         h.generators() == std::vector<int64_t>{2, 11});
  });

  add("f(<4,10,15>) = 5*f(<2,3>) + 4*4 = 21 (gluing recurrence)", "21", [&] {
    auto base = NumericalSemigroup::from_generators({2, 3});
    NumericalSemigroup glued = glue(base, 4, 5);
    int64_t fr = frobenius_glued(base, 4, 5);
    auto fresh = NumericalSemigroup::from_generators({4, 10, 15});
    return std::pair(num(fr), fr == 21 && glued.frobenius() == 21 &&
                                  fresh.frobenius() == 21 &&
                                  glued.generators() ==
                                      std::vector<int64_t>{4, 10, 15});
  });
  add("N_s = ord(f+s)+1 on <4,10,15> for every generator", "3 6 10", [&] {
    auto h = NumericalSemigroup::from_generators({4, 10, 15});
    std::string got;
    bool ok = true;
    for (int64_t s : h.generators()) {
      int64_t ns = n_value_apery(h, s);
      ok = ok && ns == n_value_ord_formula(h, s);
      if (!got.empty()) got += ' ';
      got += num(ns);
    }
    return std::pair(got, ok && got == "3 6 10");
  });
  add("sorted Apery pairing w_i + w_{s-1-i} = f+s on <8,27,45>, s=8",
      "all pairs sum to 135", [&] {
        auto sorted = h82745.apery_set(8).sorted();
        for (size_t k = 0; k < sorted.size(); ++k)
          if (sorted[k].first + sorted[sorted.size() - 1 - k].first != 135)
            return std::pair(std::string("pair mismatch at i=") +
                                 std::to_string(k),
                             false);
        return std::pair(std::string("all pairs sum to 135"), true);
      });
  return rows;
}

int cmd_paper_examples(const std::string& format, std::ostream& out) {
  auto rows = example_rows();
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.match;

  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"claim", r.claim},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"match", r.match}});
    out << arr.dump() << "\n";
  } else if (format == "csv") {
    out << "claim,expected,computed,match\n";
    for (const auto& r : rows)
      out << csv_quote(r.claim) << ',' << csv_quote(r.expected) << ','
          << csv_quote(r.computed) << ',' << yesno(r.match) << "\n";
  } else {
    for (const auto& r : rows)
      out << (r.match ? "ok   " : "FAIL ") << r.claim << " | expected "
          << r.expected << " | computed " << r.computed << "\n";
    out << (all_ok ? "all claims reproduced\n" : "MISMATCH\n");
  }
  return all_ok ? 0 : 1;
}

void apply_env_limits() {
  limits() = Limits{};
  if (const char* env = std::getenv("NSRING_MAX_FROBENIUS")) {
    limits().max_table = parse_int(env, "NSRING_MAX_FROBENIUS");
    if (limits().max_table < 1)
      fail(errc::invalid_argument, "NSRING_MAX_FROBENIUS must be positive");
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"numerical semigroup ring invariants"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  std::string kernel = "auto";
  auto* kernel_opt = app.add_option("--kernel", kernel, "table-fill kernel")
                         ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  int64_t max_frobenius = 0;
  app.add_option("--max-frobenius", max_frobenius,
                 "cap on dense table sizes (overrides NSRING_MAX_FROBENIUS)");
  int64_t max_generator = 0;
  app.add_option("--max-generator", max_generator, "cap on generator size");
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (0 = logical cores)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "elementary invariants");
  analyze->fallthrough();
  std::string analyze_gens, analyze_file;
  analyze->add_option("generators", analyze_gens, "comma-separated generators");
  analyze->add_option("--file", analyze_file, "JSON array of generators");

  // index
  auto* index_cmd = app.add_subcommand("index", "index / Loewy length report");
  index_cmd->fallthrough();
  std::string index_gens, index_file, index_method = "auto";
  index_cmd->add_option("generators", index_gens, "comma-separated generators");
  index_cmd->add_option("--file", index_file, "JSON array of generators");
  index_cmd->add_option("--method", index_method, "computation method")
      ->check(CLI::IsMember(
          {"auto", "apery", "direct", "ord-formula", "ci3"}))
      ->capture_default_str();

  // ci3
  auto* ci3_cmd =
      app.add_subcommand("ci3", "complete-intersection structure (edim 3)");
  ci3_cmd->fallthrough();
  std::string ci3_gens, ci3_file;
  ci3_cmd->add_option("generators", ci3_gens, "comma-separated generators");
  ci3_cmd->add_option("--file", ci3_file, "JSON array of generators");

  // glue
  auto* glue_cmd = app.add_subcommand("glue", "Watanabe gluing <a, pH>");
  glue_cmd->fallthrough();
  std::string glue_base, glue_file;
  int64_t glue_a = 0, glue_p = 0;
  glue_cmd->add_option("--base", glue_base, "base generators, comma-separated");
  glue_cmd->add_option("--a", glue_a, "gluing element (order > 1 in base)");
  glue_cmd->add_option("--p", glue_p, "gluing factor, coprime to a");
  glue_cmd->add_option("--file", glue_file, "JSON gluing step {base, a, p}");

  // family
  auto* family_cmd = app.add_subcommand("family", "closed-form families");
  family_cmd->fallthrough();
  std::string family_kind, family_n, family_a = "1", family_file;
  family_cmd->add_option("--kind", family_kind, "family kind")
      ->check(CLI::IsMember({"hna", "watanabe-hna", "ding3", "ding-gap-3gen"}));
  family_cmd->add_option("--n", family_n, "n or range lo..hi");
  family_cmd->add_option("--a", family_a, "odd a or range lo..hi (hna)");
  family_cmd->add_option("--file", family_file, "JSON family spec");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "formula-vs-oracle verification sweeps");
  verify_cmd->fallthrough();
  std::vector<std::string> suites{"all"};
  verify_cmd->add_option("--suite", suites, "suites to run")
      ->check(CLI::IsMember({"all", "main-theorem", "shen-bryant",
                             "gluing-frobenius", "hypersurface", "hna",
                             "ding-family", "apery-symmetry", "ding-nonneg"}));
  int v_count = 200, v_chains = 100, v_pairs = 50, v_hna_n = 8, v_depth = 3;
  int64_t v_hna_a = 9, v_ding_n = 6, v_f_cap = 100'000;
  uint64_t v_seed = 0x5eedc0de;
  std::string v_fault = "none";
  verify_cmd->add_option("--count", v_count, "main-theorem instances")
      ->capture_default_str();
  verify_cmd->add_option("--chains", v_chains, "gluing-chain instances")
      ->capture_default_str();
  verify_cmd->add_option("--pairs", v_pairs, "hypersurface pairs")
      ->capture_default_str();
  verify_cmd->add_option("--hna-n", v_hna_n, "max n for H_{n,a}")
      ->capture_default_str();
  verify_cmd->add_option("--hna-a", v_hna_a, "max odd a for H_{n,a}")
      ->capture_default_str();
  verify_cmd->add_option("--ding-n", v_ding_n, "max n for the 3-gen family")
      ->capture_default_str();
  verify_cmd->add_option("--depth", v_depth, "max gluing depth")
      ->capture_default_str();
  verify_cmd->add_option("--f-cap", v_f_cap, "Frobenius cap for chains")
      ->capture_default_str();
  verify_cmd->add_option("--seed", v_seed, "corpus seed")->capture_default_str();
  verify_cmd
      ->add_option("--inject-fault", v_fault,
                   "harness self-test: break a formula on purpose")
      ->check(CLI::IsMember({"none", "n-formula-b"}));

  // paper-examples
  app.add_subcommand("paper-examples",
                     "reproduce the documented worked examples")
      ->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err); // --help
    print_error(err, "InvalidArgument", e.what());
    return 2;
  }

  try {
    apply_env_limits();
    if (max_frobenius > 0) limits().max_table = max_frobenius;
    if (max_generator > 0) limits().max_generator = max_generator;
    if (kernel_opt->count() > 0) kernels::set_active(kernel);

    if (app.got_subcommand("analyze"))
      return cmd_analyze(load_generators(analyze_gens, analyze_file), format,
                         out);
    if (app.got_subcommand("index"))
      return cmd_index(load_generators(index_gens, index_file), index_method,
                       format, out);
    if (app.got_subcommand("ci3"))
      return cmd_ci3(load_generators(ci3_gens, ci3_file), format, out);
    if (app.got_subcommand("glue")) {
      GluingStep step;
      if (!glue_file.empty()) {
        step = gluing_step_from_json(read_json_file(glue_file));
      } else {
        if (glue_base.empty() || glue_a == 0 || glue_p == 0)
          fail(errc::invalid_argument, "glue needs --base, --a and --p");
        step = GluingStep{parse_generator_list(glue_base), glue_a, glue_p};
      }
      return cmd_glue(step, format, out);
    }
    if (app.got_subcommand("family")) {
      std::vector<FamilySpec> specs;
      if (!family_file.empty()) {
        specs.push_back(family_spec_from_json(read_json_file(family_file)));
      } else {
        if (family_kind.empty() || family_n.empty())
          fail(errc::invalid_argument, "family needs --kind and --n");
        bool hna = family_kind == "hna" || family_kind == "watanabe-hna";
        Range nr = parse_range(family_n, "--n");
        Range ar = parse_range(family_a, "--a");
        for (int64_t n = nr.lo; n <= nr.hi; ++n) {
          if (hna) {
            for (int64_t a = ar.lo % 2 == 0 ? ar.lo + 1 : ar.lo; a <= ar.hi;
                 a += 2)
              specs.push_back(FamilySpec{FamilyKind::watanabe_hna, n, a});
          } else {
            specs.push_back(FamilySpec{FamilyKind::ding_gap_3gen, n, 0});
          }
        }
      }
      return cmd_family(specs, format, jobs, out);
    }
    if (app.got_subcommand("verify"))
      return cmd_verify(suites, v_count, v_chains, v_pairs, v_hna_n, v_hna_a,
                        v_ding_n, v_depth, v_f_cap, v_seed, jobs, v_fault,
                        format, out);
    if (app.got_subcommand("paper-examples"))
      return cmd_paper_examples(format, out);
    fail(errc::invalid_argument, "no command given");
  } catch (const Error& e) {
    print_error(err, e.code_name(), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    print_error(err, "InternalError", e.what());
    return 2;
  }
}

} // namespace nsring
