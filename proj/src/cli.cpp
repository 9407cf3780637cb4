#include "tanglesig/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tanglesig/error.hpp"
#include "tanglesig/io.hpp"
#include "tanglesig/linalg.hpp"
#include "tanglesig/representations.hpp"
#include "tanglesig/signatures.hpp"
#include "tanglesig/tanglefunctor.hpp"

namespace tanglesig::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string omega;
  int grid = 0;
  double tol = kDefaultTol;
  std::string out;
  std::string format = "csv";
  std::string column;
  std::string closure_t1, closure_t2, closure_t1t2;
};

// An omega specification resolved against the number of colours.
struct Points {
  std::vector<Omega> omegas;
  bool explicit_point = false;
};

std::string fmt_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", a);
  return buf;
}

std::string fmt_real(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", a);
  return buf;
}

std::string fmt_opt(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string angle_header(std::size_t mu) {
  std::string h;
  for (std::size_t i = 1; i <= mu; ++i) h += "omega_" + std::to_string(i) + "_angle,";
  return h;
}

std::string angle_cells(const Omega& w) {
  std::string s;
  for (double t : w.turns()) s += fmt_angle(t) + ",";
  return s;
}

Points resolve_points(const Options& o, int mu) {
  Points p;
  if (!o.omega.empty() && o.grid > 0) throw Error(ErrorKind::ParseError, "use either --omega or --grid");
  if (!o.omega.empty()) {
    std::vector<double> turns;
    std::stringstream ss(o.omega);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        turns.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad angle \"" + item + "\"");
      }
    }
    if (turns.size() != static_cast<std::size_t>(mu)) {
      throw Error(ErrorKind::ParseError, "--omega needs " + std::to_string(mu) + " angle(s)");
    }
    Omega w = Omega::from_turns(turns);
    require_off_forbidden_locus(w, o.tol);
    p.omegas.push_back(std::move(w));
    p.explicit_point = true;
    return p;
  }
  if (o.grid < 2) throw Error(ErrorKind::ParseError, "give --omega or --grid N with N >= 2");
  const GridSpec g = GridSpec::uniform(mu, o.grid);
  for (std::size_t i = 0; i < g.size(); ++i) p.omegas.push_back(g.point(i));
  return p;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + o.out);
  f << text;
}

// CSV or, with --format svg, its step plot.
void emit_table(const Options& o, const std::string& csv, const std::string& default_column,
                std::ostream& out) {
  if (o.format == "svg") {
    const std::string column = o.column.empty() ? default_column : o.column;
    emit(o, render_step_svg(parse_csv(csv), column), out);
  } else {
    emit(o, csv, out);
  }
}

std::string matrix_text(const CMatrix& m) {
  auto clean = [](double x) { return std::abs(x) < 1e-13 ? 0.0 : x; };
  std::string s;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double re = clean(m(r, c).real()), im = clean(m(r, c).imag());
      s += (c ? " " : "") + fmt_real(re) + (im < 0 ? "" : "+") + fmt_real(im) + "i";
    }
    s += "\n";
  }
  return s;
}

int cmd_rep(const Options& o, std::ostream& out) {
  const ColouredBraid b = io::parse_braid(io::load_json(o.inputs.at(0)));
  const Points pts = resolve_points(o, b.source.mu);
  std::string text;
  for (const Omega& w : pts.omegas) {
    const EvaluatedRep r = reduced_rep(b, w, o.tol);
    const double res = unitarity_residual(r.matrix, intersection_form(b.source, w, o.tol).form,
                                          intersection_form(b.target(), w, o.tol).form);
    std::string cells = angle_cells(w);
    cells.pop_back();
    text += "omega " + cells + "\n" + matrix_text(r.matrix);
    text += "unitarity_residual " + fmt_real(res) + "\n";
  }
  emit(o, text, out);
  return kOk;
}

int cmd_signature(const Options& o, std::ostream& out) {
  const io::json doc = io::load_json(o.inputs.at(0));
  ClosureData data;
  if (io::is_braid_document(doc)) {
    const ColouredBraid b = io::parse_braid(doc);
    if (b.source.mu != 1) throw Error(ErrorKind::ParseError, "braid signatures need mu = 1");
    if (!b.is_endomorphism()) throw Error(ErrorKind::NotAnEndomorphism, "braid is not closed up");
    data = seifert_from_braid(b);
  } else {
    data = io::parse_closure(doc);
  }
  const int mu = std::holds_alternative<CComplexData>(data) ? std::get<CComplexData>(data).mu : 1;
  const Points pts = resolve_points(o, mu);
  std::vector<std::string> rows(pts.omegas.size());
  const auto count = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const Omega& w = pts.omegas[static_cast<std::size_t>(i)];
    std::string row = angle_cells(w);
    try {
      const SignatureResult s = closure_signature(data, w, o.tol);
      row += std::to_string(s.signature()) + "," + std::to_string(s.null) + ",";
    } catch (const Error& e) {
      row += ",," + csv_escape(std::string(to_string(e.kind())) + ": " + e.what());
    }
    rows[static_cast<std::size_t>(i)] = row + "\n";
  }
  std::string csv = angle_header(static_cast<std::size_t>(mu)) + "signature,nullity,error\n";
  for (const auto& r : rows) csv += r;
  emit_table(o, csv, "signature", out);
  return kOk;
}

int cmd_meyer(const Options& o, std::ostream& out) {
  const ColouredBraid a = io::parse_braid(io::load_json(o.inputs.at(0)));
  const ColouredBraid b = io::parse_braid(io::load_json(o.inputs.at(1)));
  if (!(a.source == b.source) || !a.is_endomorphism() || !b.is_endomorphism()) {
    throw Error(ErrorKind::ColourMismatch, "meyer needs two braids in the same B_c");
  }
  const Points pts = resolve_points(o, a.source.mu);
  std::string csv = angle_header(pts.omegas.front().mu()) + "meyer,admissible,error\n";
  for (const Omega& w : pts.omegas) {
    csv += angle_cells(w);
    const bool adm = is_admissible(a.source, w, o.tol);
    try {
      const SkewSpace h = intersection_form(a.source, w, o.tol).space();
      csv += std::to_string(meyer(reduced_rep(a, w, o.tol).matrix, reduced_rep(b, w, o.tol).matrix,
                                  h, o.tol)) +
             "," + (adm ? "1" : "0") + ",\n";
    } catch (const Error& e) {
      csv += std::string(",") + (adm ? "1" : "0") + "," +
             csv_escape(std::string(to_string(e.kind())) + ": " + e.what()) + "\n";
    }
  }
  emit_table(o, csv, "meyer", out);
  return kOk;
}

int cmd_maslov(const Options& o, std::ostream& out) {
  std::vector<TangleWord> t;
  for (std::size_t i = 0; i < 3; ++i) t.push_back(io::parse_tangle(io::load_json(o.inputs.at(i))));
  for (const auto& x : t) {
    if (!x.is_endomorphism() || !(x.source() == t[0].source())) {
      throw Error(ErrorKind::ColourMismatch, "maslov needs three endomorphism tangles of one object");
    }
  }
  const Points pts = resolve_points(o, t[0].source().mu);
  std::string csv = angle_header(pts.omegas.front().mu()) + "maslov,error\n";
  for (const Omega& w : pts.omegas) {
    csv += angle_cells(w);
    try {
      const int m = maslov(functor_value(t[0], w, o.tol).relation.space(),
                           functor_value(t[1], w, o.tol).relation.space(),
                           functor_value(t[2], w, o.tol).relation.space(), o.tol);
      csv += std::to_string(m) + ",\n";
    } catch (const Error& e) {
      csv += "," + csv_escape(std::string(to_string(e.kind())) + ": " + e.what()) + "\n";
    }
  }
  emit_table(o, csv, "maslov", out);
  return kOk;
}

int cmd_functor(const Options& o, std::ostream& out) {
  const TangleWord t = io::parse_tangle(io::load_json(o.inputs.at(0)));
  const Points pts = resolve_points(o, t.source().mu);
  io::json all = io::json::array();
  for (const Omega& w : pts.omegas) {
    const FunctorValue f = functor_value(t, w, o.tol);
    const Subspace& s = f.relation.space();
    all.push_back({{"omega_turns", w.turns()},
                   {"source_dim", f.relation.source().dim()},
                   {"target_dim", f.relation.target().dim()},
                   {"dimension", s.dim()},
                   {"isotropy_residual", s.isotropy_residual()},
                   {"lagrangian", s.is_lagrangian()},
                   {"lagrangian_expected", f.lagrangian_expected},
                   {"warning", f.warning},
                   {"basis", io::matrix_to_json(s.basis())}});
  }
  emit(o, all.dump(2) + "\n", out);
  return kOk;
}

std::optional<ClosureOracle> closure_oracle(const Options& o) {
  const int given = !o.closure_t1.empty() + !o.closure_t2.empty() + !o.closure_t1t2.empty();
  if (given == 0) return std::nullopt;
  if (given != 3) {
    throw Error(ErrorKind::ParseError, "give all of --closure-t1, --closure-t2, --closure-t1t2");
  }
  ClosureOracle oracle;
  oracle.t1 = io::parse_closure(io::load_json(o.closure_t1));
  oracle.t2 = io::parse_closure(io::load_json(o.closure_t2));
  oracle.t1t2 = io::parse_closure(io::load_json(o.closure_t1t2));
  return oracle;
}

std::string report_row(const DefectReport& r) {
  return angle_cells(r.omega) + fmt_opt(r.lhs) + "," + fmt_opt(r.rhs) + "," + fmt_opt(r.meyer_rhs) +
         "," + (r.admissible ? "1" : "0") + "," + fmt_opt(r.nullity) + "," + csv_escape(r.error) +
         "\n";
}

int cmd_defect(const Options& o, bool verify, std::ostream& out, std::ostream& err) {
  const TangleWord t1 = io::parse_tangle(io::load_json(o.inputs.at(0)));
  const TangleWord t2 = io::parse_tangle(io::load_json(o.inputs.at(1)));
  if (!t1.is_endomorphism() || !t2.is_endomorphism()) {
    throw Error(ErrorKind::NotAnEndomorphism, "defect needs endomorphism tangles");
  }
  if (!(t1.source() == t2.source())) throw Error(ErrorKind::ColourMismatch, "tangles differ in c");
  const auto oracle = closure_oracle(o);
  const Points pts = resolve_points(o, t1.source().mu);

  std::vector<DefectReport> rows;
  if (pts.explicit_point) {
    rows.push_back(defect(t1, t2, pts.omegas.front(), oracle, o.tol));
  } else {
    rows = defect_sweep(t1, t2, GridSpec::uniform(t1.source().mu, o.grid), oracle, o.tol);
  }

  const std::string header =
      angle_header(static_cast<std::size_t>(t1.source().mu)) +
      "lhs,rhs,meyer_rhs,admissible,nullity,error\n";
  std::string csv = header;
  for (const auto& r : rows) csv += report_row(r);
  emit_table(o, csv, "rhs", out);

  if (!verify) return kOk;
  int bad = 0;
  for (const auto& r : rows) {
    const bool failed = !r.consistent() || (r.admissible && !r.error.empty());
    if (failed) {
      if (bad == 0) err << "offending rows:\n" << header;
      err << report_row(r);
      ++bad;
    }
  }
  if (bad) return kVerificationFailed;
  if (pts.explicit_point && !rows.front().admissible) {
    err << "omega is inadmissible (I_c(omega) = 1); the defect formula is not asserted\n";
    return kForbiddenOmega;
  }
  return kOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
  std::ifstream in(o.inputs.at(0), std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + o.inputs.at(0));
  std::stringstream ss;
  ss << in.rdbuf();
  const CsvTable table = parse_csv(ss.str());
  std::string column = o.column;
  if (column.empty()) {
    for (const char* c : {"signature", "lhs", "rhs", "meyer", "maslov"}) {
      if (std::find(table.header.begin(), table.header.end(), c) != table.header.end()) {
        column = c;
        break;
      }
    }
  }
  emit(o, render_step_svg(table, column), out);
  return kOk;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::OmegaOnForbiddenLocus:
    case ErrorKind::AdmissibilityViolated:
      return kForbiddenOmega;
    case ErrorKind::ParseError:
    case ErrorKind::ColourMismatch:
    case ErrorKind::InvalidTangle:
    case ErrorKind::NotAnEndomorphism:
    case ErrorKind::TransposeSymmetryViolated:
      return kInputError;
    default:
      return kVerificationFailed;
  }
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quote in CSV");
  cells.push_back(cur);
  return cells;
}

}  // namespace

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
    } else {
      if (cells.size() != t.header.size()) {
        throw Error(ErrorKind::ParseError, "CSV row has " + std::to_string(cells.size()) +
                                               " cells, header has " +
                                               std::to_string(t.header.size()));
      }
      t.rows.push_back(std::move(cells));
    }
  }
  if (t.header.empty()) throw Error(ErrorKind::ParseError, "empty CSV");
  return t;
}

std::string render_step_svg(const CsvTable& table, const std::string& column) {
  std::vector<std::size_t> angle_cols;
  std::optional<std::size_t> value_col;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    const std::string& h = table.header[i];
    if (h.rfind("omega_", 0) == 0 && h.size() > 6 && h.substr(h.size() - 6) == "_angle") angle_cols.push_back(i);
    if (h == column) value_col = i;
  }
  if (angle_cols.size() != 1) throw Error(ErrorKind::ParseError, "plot needs exactly one angle column");
  if (!value_col) throw Error(ErrorKind::ParseError, "CSV has no column \"" + column + "\"");

  std::vector<std::pair<double, int>> pts;
  for (const auto& row : table.rows) {
    const std::string& v = row[*value_col];
    if (v.empty()) continue;
    try {
      std::size_t used = 0;
      const double x = std::stod(row[angle_cols[0]]);
      const int y = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      pts.emplace_back(x, y);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "non-numeric CSV cell \"" + v + "\"");
    }
  }
  std::sort(pts.begin(), pts.end());

  const double width = 640, height = 360, left = 50, right = 20, top = 20, bottom = 40;
  int ymin = -1, ymax = 1;
  for (const auto& p : pts) {
    ymin = std::min(ymin, p.second);
    ymax = std::max(ymax, p.second);
  }
  auto sx = [&](double x) { return left + x * (width - left - right); };
  auto sy = [&](double y) {
    return top + (ymax + 0.5 - y) / (ymax - ymin + 1.0) * (height - top - bottom);
  };
  auto num = [](double v) { return fmt_real(std::round(v * 100.0) / 100.0); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  s << "<line class=\"axis\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\""
    << num(sx(1)) << "\" y2=\"" << num(sy(0)) << "\" stroke=\"#999\"/>\n";
  for (int y = ymin; y <= ymax; ++y) {
    s << "<text x=\"" << num(left - 10) << "\" y=\"" << num(sy(y) + 4)
      << "\" font-size=\"12\" text-anchor=\"end\">" << y << "</text>\n";
  }
  s << "<text x=\"" << num(width / 2) << "\" y=\"" << num(height - 10)
    << "\" font-size=\"12\" text-anchor=\"middle\">" << table.header[angle_cols[0]] << " (turns) vs "
    << column << "</text>\n";

  // Plateaus of equal consecutive values; steps sit halfway between samples.
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i;
    while (j + 1 < pts.size() && pts[j + 1].second == pts[i].second) ++j;
    const double x0 = i == 0 ? pts[i].first : (pts[i - 1].first + pts[i].first) / 2;
    const double x1 = j + 1 == pts.size() ? pts[j].first : (pts[j].first + pts[j + 1].first) / 2;
    s << "<line class=\"plateau\" x1=\"" << num(sx(x0)) << "\" y1=\"" << num(sy(pts[i].second))
      << "\" x2=\"" << num(sx(x1)) << "\" y2=\"" << num(sy(pts[i].second))
      << "\" stroke=\"#1f4e9c\" stroke-width=\"3\"/>\n";
    if (j + 1 < pts.size()) {
      s << "<line class=\"jump\" x1=\"" << num(sx(x1)) << "\" y1=\"" << num(sy(pts[j].second))
        << "\" x2=\"" << num(sx(x1)) << "\" y2=\"" << num(sy(pts[j + 1].second))
        << "\" stroke=\"#c0392b\" stroke-dasharray=\"4 3\"/>\n";
    }
    i = j + 1;
  }
  s << "</svg>\n";
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coloured link signatures, Gassner representations and the signature defect"};
  app.require_subcommand(1);
  Options o;

  auto add_omega = [&](CLI::App* sub) {
    sub->add_option("--omega", o.omega, "angles in turns, comma separated, one per colour");
    sub->add_option("--grid", o.grid, "uniform grid k/N, k = 1..N-1, on every colour")
        ->check(CLI::Range(2, 1 << 20));
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "output path (default stdout)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    sub->add_option("--column", o.column, "column plotted with --format svg");
  };

  auto* rep = app.add_subcommand("rep", "reduced Burau/Gassner matrix of a braid");
  rep->add_option("braid", o.inputs, "braid file")->required()->expected(1);
  add_omega(rep);
  add_common(rep);

  auto* sig = app.add_subcommand("signature", "signature of a braid closure or fixture");
  sig->add_option("file", o.inputs, "braid, Seifert or C-complex file")->required()->expected(1);
  add_omega(sig);
  add_common(sig);
  add_format(sig);

  auto* mey = app.add_subcommand("meyer", "Meyer cocycle of two braids");
  mey->add_option("braids", o.inputs, "two braid files")->required()->expected(2);
  add_omega(mey);
  add_common(mey);
  add_format(mey);

  auto* mas = app.add_subcommand("maslov", "Maslov index of the functor values of three tangles");
  mas->add_option("tangles", o.inputs, "three tangle files")->required()->expected(3);
  add_omega(mas);
  add_common(mas);
  add_format(mas);

  auto* fun = app.add_subcommand("functor", "isotropic functor value of a tangle");
  fun->add_option("tangle", o.inputs, "tangle file")->required()->expected(1);
  add_omega(fun);
  add_common(fun);

  auto* ver = app.add_subcommand("verify-defect", "check the defect formulas on a grid");
  auto* swp = app.add_subcommand("sweep", "tabulate the defect quantities on a grid");
  for (auto* sub : {ver, swp}) {
    sub->add_option("tangles", o.inputs, "two tangle files")->required()->expected(2);
    sub->add_option("--closure-t1", o.closure_t1, "closure signature fixture of t1");
    sub->add_option("--closure-t2", o.closure_t2, "closure signature fixture of t2");
    sub->add_option("--closure-t1t2", o.closure_t1t2, "closure signature fixture of t1 then t2");
    add_omega(sub);
    add_common(sub);
    add_format(sub);
  }

  auto* plot = app.add_subcommand("plot", "SVG step plot of a CSV column");
  plot->add_option("csv", o.inputs, "CSV file")->required()->expected(1);
  plot->add_option("--column", o.column, "column to plot");
  plot->add_option("--out", o.out, "output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (rep->parsed()) return cmd_rep(o, out);
    if (sig->parsed()) return cmd_signature(o, out);
    if (mey->parsed()) return cmd_meyer(o, out);
    if (mas->parsed()) return cmd_maslov(o, out);
    if (fun->parsed()) return cmd_functor(o, out);
    if (ver->parsed()) return cmd_defect(o, true, out, err);
    if (swp->parsed()) return cmd_defect(o, false, out, err);
    if (plot->parsed()) return cmd_plot(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kInputError;
}

}  // namespace tanglesig::cli
