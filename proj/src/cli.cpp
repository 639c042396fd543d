#include "ewkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "ewkit/angles.hpp"
#include "ewkit/constructions.hpp"
#include "ewkit/errors.hpp"
#include "ewkit/generators.hpp"
#include "ewkit/linalg.hpp"
#include "ewkit/matrix_io.hpp"
#include "ewkit/verify.hpp"

namespace ewkit {

namespace {

std::string seidel_tag(SeidelKind kind) {
  return kind == SeidelKind::skew ? kKindSeidelSkew : kKindSeidelSym;
}

std::vector<std::size_t> parse_indices(const std::string& csv) {
  std::vector<std::size_t> idx;
  std::size_t at = 0;
  while (at <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', at), csv.size());
    const std::string tok = csv.substr(at, comma - at);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("indices must be a comma-separated list of integers");
    idx.push_back(std::stoul(tok));
    at = comma + 1;
  }
  return idx;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for EW, conference, and tournament matrices",
               "ewkit"};
  app.require_subcommand(1);

  int code = 0;
  std::string current = "ewkit";  // names the FAIL certificate on preconditions
  std::string file, out_path = "-", property, family_opt, mode, indices_csv;
  unsigned long t_opt = 0, q = 0;
  std::size_t order = 6;
  std::uint64_t seed = 0;
  std::size_t limit = 1;
  bool skew_only = false, to_conference = false;

  auto load = [&]() -> MatrixDoc {
    if (file == "-") return read_matrix(in);
    std::ifstream f(file);
    if (!f.good()) throw input_error("cannot open '" + file + "'");
    return read_matrix(f);
  };
  auto with_out = [&](auto&& fn) {
    if (out_path == "-") {
      fn(out);
      return;
    }
    std::ofstream f(out_path);
    if (!f.good()) throw input_error("cannot open '" + out_path + "'");
    fn(f);
  };
  auto emit = [&](const MatrixDoc& doc) {
    with_out([&](std::ostream& os) { write_matrix(os, doc); });
  };
  auto finish = [&](const Certificate& cert) {
    cert.write(out);
    code = cert.pass ? 0 : 1;
  };

  CLI::App* cp = app.add_subcommand("charpoly",
                                    "ascending integer coefficients of "
                                    "det(xI - M)");
  cp->add_option("FILE", file, "matrix file, - for stdin")->required();
  cp->callback([&] {
    current = "charpoly";
    out << charpoly(load().mat).str() << "\n";
  });

  CLI::App* vf = app.add_subcommand("verify", "check a defining identity");
  vf->add_option("--property", property,
                 "hadamard|ew|conference|skew-type|doubly-regular|det-mod4|"
                 "spectrum")
      ->required();
  vf->add_option("--family", family_opt, "target family for spectrum checks");
  vf->add_option("--t", t_opt, "family parameter for spectrum checks");
  vf->add_option("FILE", file)->required();
  vf->callback([&] {
    current = "verify";
    if (property == "spectrum") {
      if (family_opt.empty())
        throw input_error("spectrum checks need --family and --t");
      std::optional<Family> fam = family_from_name(family_opt);
      if (!fam) throw input_error("unknown family '" + family_opt + "'");
      if (t_opt < 1) throw input_error("--t must be at least 1");
      finish(spectrum_check(load().mat, target_charpoly(*fam, t_opt)));
      return;
    }
    std::optional<Property> prop = property_from_name(property);
    if (!prop) throw input_error("unknown property '" + property + "'");
    finish(verify(*prop, load().mat));
  });

  CLI::App* cv = app.add_subcommand("convert", "move between object types");
  cv->add_option("MODE", mode,
                 "ew-to-tournament|tournament-to-ew|seidel-to-tournament|"
                 "tournament-to-seidel|conference-to-hadamard")
      ->required();
  cv->add_option("FILE", file)->required();
  cv->add_option("--out", out_path, "output file, - for stdout");
  cv->callback([&] {
    current = "convert";
    MatrixDoc doc = load();
    if (mode == "ew-to-tournament") {
      emit({kKindTournament, ew_to_tournament(doc.mat).body});
    } else if (mode == "tournament-to-ew") {
      emit({kKindPm1, tournament_to_ew(Tournament(doc.mat))});
    } else if (mode == "seidel-to-tournament") {
      emit({kKindTournament,
            tournament_from_seidel(make_seidel(doc.mat)).body});
    } else if (mode == "tournament-to-seidel") {
      emit({kKindSeidelSkew,
            seidel_from_tournament(Tournament(doc.mat)).body});
    } else if (mode == "conference-to-hadamard") {
      emit({kKindPm1, hadamard_from_conference(make_seidel(doc.mat))});
    } else {
      throw input_error("unknown conversion '" + mode + "'");
    }
  });

  CLI::App* dl = app.add_subcommand("delete", "principal submatrix");
  dl->add_option("--indices", indices_csv, "comma-separated row/column list")
      ->required();
  dl->add_option("FILE", file)->required();
  dl->add_option("--out", out_path);
  dl->callback([&] {
    current = "delete";
    IntMat m = delete_principal(load().mat, parse_indices(indices_csv));
    emit({detect_kind(m), m});
  });

  CLI::App* cm = app.add_subcommand(
      "complete", "rebuild deleted rows of a conference matrix");
  cm->add_flag("--to-conference", to_conference,
               "iterate until the matrix verifies as a conference matrix");
  cm->add_option("FILE", file)->required();
  cm->add_option("--out", out_path);
  cm->callback([&] {
    current = "complete";
    SeidelMatrix s = make_seidel(load().mat);
    SeidelMatrix done = to_conference ? complete_to_conference(s)
                                      : complete_step(s);
    emit({seidel_tag(done.kind), done.body});
  });

  CLI::App* sq = app.add_subcommand("square-form",
                                    "classify by the square of the matrix");
  sq->add_option("FILE", file)->required();
  sq->callback([&] {
    current = "square-form";
    SquareFormClass sf = square_form(make_seidel(load().mat));
    Certificate cert("square-form", true);
    cert.add("stage", stage_name(sf.stage));
    cert.add("t", std::to_string(sf.t));
    cert.add("kind",
             sf.kind == SeidelKind::skew ? "skew" : "symmetric");
    const std::size_t n = sf.canonical.rows();
    std::vector<std::size_t> blocks;
    if (sf.stage == Stage::minus1) blocks = {n};
    if (sf.stage == Stage::minus2) blocks = {n / 2, n / 2};
    if (sf.stage == Stage::minus3) {
      const std::size_t head =
          sf.kind == SeidelKind::skew ? sf.t + 1 : sf.t - 1;
      blocks = {head, sf.t, sf.t, sf.t};
    }
    if (!blocks.empty()) {
      std::string joined;
      for (std::size_t b : blocks)
        joined += (joined.empty() ? "" : ",") + std::to_string(b);
      cert.add("blocks", joined);
    }
    finish(cert);
  });

  CLI::App* gn = app.add_subcommand("gen", "generate matrices");
  gn->require_subcommand(1);
  CLI::App* gp = gn->add_subcommand("paley", "conference matrix of order q+1");
  gp->add_option("--q", q, "odd prime")->required();
  gp->add_option("--out", out_path);
  gp->callback([&] {
    current = "gen";
    SeidelMatrix s = paley(q);
    emit({seidel_tag(s.kind), s.body});
  });
  CLI::App* ge = gn->add_subcommand("ew", "exhaustive EW matrix search");
  ge->add_option("--order", order, "must be 2 (mod 4)")->required();
  ge->add_flag("--skew", skew_only, "restrict to skew type");
  ge->add_option("--limit", limit, "stop after this many matrices");
  ge->add_option("--out", out_path);
  ge->callback([&] {
    current = "gen";
    SearchConfig cfg;
    cfg.order = order;
    cfg.skew_only = skew_only;
    cfg.limit = limit;
    std::vector<IntMat> found = search_ew(cfg);
    with_out([&](std::ostream& os) {
      for (const IntMat& m : found) write_matrix(os, {kKindPm1, m});
    });
  });

  CLI::App* sc = app.add_subcommand("scramble", "seeded switching conjugation");
  sc->add_option("--seed", seed)->required();
  sc->add_option("FILE", file)->required();
  sc->add_option("--out", out_path);
  sc->callback([&] {
    current = "scramble";
    IntMat switched = random_switch(load().mat, seed).second;
    emit({detect_kind(switched), switched});
  });

  CLI::App* an = app.add_subcommand("angles",
                                    "main angles against the matched family");
  an->add_option("FILE", file)->required();
  an->callback([&] {
    current = "angles";
    MatrixDoc doc = load();
    // Work out the Seidel matrix the file describes: a seidel kind is taken
    // as-is, a tournament contributes its orientation matrix, and a +-1
    // matrix with unit diagonal contributes M - I. The angles belong to
    // exactly that matrix -- they are not switching invariants, so switching
    // the input changes the output.
    std::string kind = doc.kind == kKindInt ? detect_kind(doc.mat) : doc.kind;
    std::optional<SeidelMatrix> s;
    if (kind == kKindSeidelSkew || kind == kKindSeidelSym) {
      s = make_seidel(doc.mat);
    } else if (kind == kKindTournament) {
      s = seidel_from_tournament(Tournament(doc.mat));
    } else if (kind == kKindPm1) {
      bool unit_diag = true;
      for (std::size_t i = 0; i < doc.mat.rows(); ++i)
        if (doc.mat.at(i, i) != 1) unit_diag = false;
      if (unit_diag)
        s = make_seidel(doc.mat - IntMat::identity(doc.mat.rows()));
    }
    if (!s) {
      finish(Certificate::failure("angles",
                                  "input has no associated seidel matrix"));
      return;
    }
    auto fam = family_of_charpoly(charpoly(s->body));
    if (!fam) {
      finish(Certificate::failure("angles",
                                  "charpoly matches no known family"));
      return;
    }
    Spectrum spectrum =
        spectrum_from_factored(target_charpoly(fam->first, fam->second));
    MainAngles ma = main_angles(*s, spectrum);
    out << "family=" << family_name(fam->first) << "\n";
    out << "t=" << fam->second << "\n";
    for (const auto& [eig, alpha] : ma.entries)
      out << "alpha(" << eig.str() << ")=" << to_string(alpha) << "\n";
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    Certificate::failure(current, e.what()).write(out);
    return 1;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace ewkit
