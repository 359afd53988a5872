// mvstool.cpp -- command-line front end: one subcommand per library
// operation, line-oriented documents in, deterministic reports out.
//
// Exit codes: 0 = property holds / object produced, 1 = property fails
// (witness printed), 2 = input error, 3 = undecided within bounds.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "mvs/algebra.hpp"
#include "mvs/error.hpp"
#include "mvs/hom.hpp"
#include "mvs/io.hpp"
#include "mvs/quasimetric.hpp"
#include "mvs/relation.hpp"
#include "mvs/topology.hpp"
#include "mvs/words.hpp"

namespace {

using namespace mvs;

struct Settings {
  std::size_t bound = 4;
  std::uint64_t budget = 0; // 0 = per-operation default
  bool symmetric = false;
  std::size_t max_model_size = 3; // 0 = skip the model search
};

std::uint64_t word_budget(const Settings& s) {
  return s.budget == 0 ? kDefaultWordBudget : s.budget;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string rel_str(const Presentation& p, Rel r) {
  const Alphabet& al = p.alphabet();
  const std::string sep = al.all_single_char() ? "" : ",";
  return al.letter(r.a) + sep + al.letter(r.b) + "~" + al.letter(r.c);
}

int cmd_check(const std::string& file) {
  const Document doc = parse_document(read_file(file));
  if (doc.kind != DocKind::Mvs) {
    throw SemanticError(file + ": expected an mvs document, got " + kind_name(doc.kind));
  }
  const auto& raw = std::get<RawTable>(doc.body);
  require_well_formed(raw);
  const AxiomReport rep = check_axioms(raw);
  if (rep.all_hold()) {
    std::cout << "MVS: axioms M1-M4 hold\n";
    std::cout << "elements: " << raw.card() << "\n";
    std::cout << "neutral: " << raw.names[*rep.neutral] << "\n";
    const FiniteMvs m = validate(raw);
    std::cout << "commutative: " << yes_no(m.commutative()) << "\n";
    return 0;
  }
  if (!rep.card_ok) {
    std::cout << "NOT AN MVS: carrier exceeds the size cap\n";
    return 1;
  }
  std::string failed;
  for (const auto& [ok, tag] : {std::pair{rep.m1_holds, "M1"}, {rep.m2_holds, "M2"},
                                {rep.m3_holds, "M3"}, {rep.m4_holds, "M4"}}) {
    if (!ok) {
      failed += (failed.empty() ? "" : ", ") + std::string(tag);
    }
  }
  std::cout << "NOT AN MVS: fails " << failed << "\n";
  const auto& nm = raw.names;
  if (!rep.m1_holds) {
    const auto& w = *rep.m1_witness;
    std::cout << "M1: (" << nm[w[0]] << " + " << nm[w[1]] << ") + " << nm[w[2]] << " != "
              << nm[w[0]] << " + (" << nm[w[1]] << " + " << nm[w[2]] << ")\n";
  }
  if (!rep.m2_holds) {
    std::cout << "M2: no two-sided neutral element\n";
  }
  if (!rep.m3_holds) {
    const auto& w = *rep.m3_witness;
    std::cout << "M3: " << nm[w[0]] << " + " << nm[w[1]] << " = " << nm[*rep.neutral]
              << " decomposes the neutral element\n";
  }
  if (!rep.m4_holds) {
    const auto& w = *rep.m4_witness;
    std::cout << "M4: no common divisor for " << nm[w[0]] << " and " << nm[w[1]] << "\n";
  }
  return 1;
}

int cmd_order(const std::string& file) {
  const FiniteMvs m = load_mvs(file);
  const OrderClassification oc = order_class(m);
  switch (oc.kind) {
  case OrderKind::TotallyOrdered:
    std::cout << "ORDER: TotallyOrdered\n";
    break;
  case OrderKind::PartiallyOrdered:
    std::cout << "ORDER: PartiallyOrdered\n";
    std::cout << "witness: " << m.name((*oc.witness)[0]) << " and " << m.name((*oc.witness)[1])
              << " are incomparable\n";
    break;
  case OrderKind::NotAntisymmetric:
    std::cout << "ORDER: NotAntisymmetric\n";
    std::cout << "witness: " << m.name((*oc.witness)[0]) << " and " << m.name((*oc.witness)[1])
              << " divide each other\n";
    break;
  }
  return 0;
}

void print_congruence_failure(const FiniteMvs& m, const CongruenceCheck& chk) {
  auto name = [&m](ElemId i) { return m.name(i); };
  switch (chk.failure) {
  case CongruenceCheck::Failure::NotReflexive:
    std::cout << "NOT A CONGRUENCE: not reflexive\n";
    std::cout << "witness: " << name(chk.witness[0]) << "\n";
    break;
  case CongruenceCheck::Failure::NotSymmetric:
    std::cout << "NOT A CONGRUENCE: not symmetric\n";
    std::cout << "witness: (" << name(chk.witness[0]) << ", " << name(chk.witness[1]) << ")\n";
    break;
  case CongruenceCheck::Failure::NotTransitive:
    std::cout << "NOT A CONGRUENCE: not transitive\n";
    std::cout << "witness: (" << name(chk.witness[0]) << ", " << name(chk.witness[1]) << ", "
              << name(chk.witness[2]) << ")\n";
    break;
  case CongruenceCheck::Failure::Incompatible:
    std::cout << "NOT A CONGRUENCE: incompatible with +\n";
    std::cout << "witness: " << name(chk.witness[0]) << " ~ " << name(chk.witness[1]) << ", "
              << name(chk.witness[2]) << " ~ " << name(chk.witness[3]) << "\n";
    break;
  case CongruenceCheck::Failure::None:
    break;
  }
}

int cmd_quotient(const std::string& mvs_file, const std::string& rel_file) {
  const FiniteMvs m = load_mvs(mvs_file);
  const Document rdoc = parse_document(read_file(rel_file));
  if (rdoc.kind != DocKind::Relation) {
    throw SemanticError(rel_file + ": expected a relation document");
  }
  const ElemRelation r = bind_relation(std::get<RelationDoc>(rdoc.body), m);
  const CongruenceCheck chk = is_congruence(m, r);
  if (!chk.ok()) {
    print_congruence_failure(m, chk);
    return 1;
  }
  Quotient q;
  try {
    q = quotient(m, r);
  } catch (const NeutralClassNotTrivial& e) {
    std::cout << "NOT A QMVS: " << e.what() << "\n";
    return 1;
  }
  std::cout << "QUOTIENT: " << q.mvs.card() << " classes\n";
  const auto classes = r.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::cout << "class " << q.mvs.name(c) << ":";
    for (ElemId e : classes[c]) {
      std::cout << " " << m.name(e);
    }
    std::cout << "\n";
  }
  std::cout << "\n" << serialize(to_document(q.mvs.raw()));
  return 0;
}

int cmd_hom_check(const std::string& file) {
  MvsMap h;
  try {
    h = load_map(file);
  } catch (const H1Violation& e) {
    std::cout << "NOT A HOM: " << e.what() << "\n";
    return 1;
  } catch (const H2Violation& e) {
    std::cout << "NOT A HOM: " << e.what() << "\n";
    return 1;
  }
  std::cout << "HOM: zero-preservation and additivity hold\n";
  std::cout << "bijective: " << yes_no(h.bijective()) << "\n";
  return 0;
}

int cmd_hom_kernel(const std::string& file) {
  const MvsMap h = load_map(file);
  const ElemRelation ker = kernel(h);
  std::cout << "KERNEL: " << ker.classes().size() << " classes\n";
  std::cout << "\n" << serialize(to_document(ker, h.domain().names()));
  return 0;
}

int cmd_hom_image(const std::string& file) {
  const MvsMap h = load_map(file);
  const std::vector<ElemId> img = image(h);
  const SubMvs s = sub_mvs(h.codomain(), img);
  std::cout << "IMAGE: " << img.size() << " elements\n";
  std::cout << "members:";
  for (ElemId e : img) {
    std::cout << " " << h.codomain().name(e);
  }
  std::cout << "\n\n" << serialize(to_document(s.mvs.raw()));
  return 0;
}

int cmd_iso(const std::string& file1, const std::string& file2) {
  const FiniteMvs m = load_mvs(file1);
  const FiniteMvs n = load_mvs(file2);
  const std::optional<MvsMap> h = find_isomorphism(m, n);
  if (!h) {
    std::cout << "NOT ISOMORPHIC\n";
    return 1;
  }
  std::cout << "ISOMORPHIC\n";
  for (ElemId a = 0; a < m.card(); ++a) {
    std::cout << "send " << m.name(a) << " -> " << n.name(h->apply(a)) << "\n";
  }
  return 0;
}

int cmd_fine(const std::string& file) {
  const MvsMap h = load_map(file);
  const FineCheck fc = is_fine(h);
  if (fc.fine) {
    std::cout << "FINE: every nonzero codomain element has a divisor in the image\n";
    return 0;
  }
  std::cout << "NOT FINE\n";
  std::cout << "witness: no image element divides " << h.codomain().name(*fc.witness) << "\n";
  return 1;
}

int cmd_adjoin_inf(const std::string& file) {
  const FiniteMvs m = load_mvs(file);
  const Extension ext = adjoin_infinity(m);
  std::cout << "ADJOINED: " << ext.mvs.name(ext.infinity) << "\n";
  std::cout << "\n" << serialize(to_document(ext.mvs.raw()));
  return 0;
}

int cmd_qm_check(const std::string& file) {
  const Document doc = parse_document(read_file(file));
  if (doc.kind != DocKind::Quasimetric) {
    throw SemanticError(file + ": expected a quasimetric document");
  }
  // Bind by hand so a failing table still yields a full report.
  QuasimetricTable q;
  try {
    q = load_quasimetric(file);
  } catch (const QuasimetricViolation& e) {
    const QuasimetricCheck& c = e.check();
    const auto& qd = std::get<QuasimetricDoc>(doc.body);
    std::string failed;
    if (!c.f1) {
      failed += "f1";
    }
    if (!c.f2) {
      failed += (failed.empty() ? "" : ", ") + std::string("f2");
    }
    std::cout << "NOT A QUASIMETRIC: fails " << failed << "\n";
    if (!c.f1) {
      const auto& w = *c.f1_witness;
      std::cout << "f1: f(" << qd.points[w[0]] << ", " << qd.points[w[2]]
                << ") does not divide the sum via " << qd.points[w[1]] << "\n";
    }
    if (!c.f2) {
      std::cout << "f2: f(" << qd.points[*c.f2_witness] << ", " << qd.points[*c.f2_witness]
                << ") is not zero\n";
    }
    return 1;
  }
  std::cout << "QUASIMETRIC: triangle and diagonal conditions hold\n";
  std::cout << "symmetric: " << yes_no(q.symmetric()) << "\n";
  return 0;
}

int cmd_topology(const std::string& file) {
  const QuasimetricTable q = load_quasimetric(file);
  const FiniteTopology t = induced_topology(q);
  std::cout << "TOPOLOGY: " << t.opens().size() << " open sets\n";
  std::cout << "\n" << serialize(to_document(t, q.points()));
  return 0;
}

int cmd_finer(const std::string& file1, const std::string& file2) {
  const QuasimetricTable q1 = load_quasimetric(file1);
  const QuasimetricTable q2 = load_quasimetric(file2);
  if (is_finer(q1, q2)) {
    std::cout << "FINER: every open set of the second is induced by the first\n";
    return 0;
  }
  std::cout << "NOT FINER\n";
  return 1;
}

int cmd_metrize(const std::string& top_file, const std::string& mvs_file,
                const Settings& s) {
  const auto [t, names] = load_topology(top_file);
  const FiniteMvs m = load_mvs(mvs_file);
  SearchOptions opts;
  opts.budget = s.budget == 0 ? kDefaultSearchBudget : s.budget;
  opts.symmetric_only = s.symmetric;
  const std::optional<QuasimetricTable> q = search_metrizable(t, m, names, opts);
  if (!q) {
    std::cout << "NOT METRIZABLE: exhaustive search found no table\n";
    return 1;
  }
  std::cout << "METRIZABLE\n";
  std::cout << "\n" << serialize(to_document(*q, mvs_file));
  return 0;
}

int cmd_canonical_qm(const std::string& file) {
  const FiniteMvs m = load_mvs(file);
  const QuasimetricTable q = canonical_quasimetric(m);
  std::cout << "CANONICAL: " << q.point_count() << " points\n";
  std::cout << "\n" << serialize(to_document(q, file));
  return 0;
}

int cmd_quotient_metrize(const std::string& file, const std::string& out_mvs,
                         const std::string& out_qm) {
  const QuasimetricTable q = load_quasimetric(file);
  const QuotientMetrize r = quotient_metrize(q);
  std::cout << "QUOTIENT METRIZED: " << r.projection.codomain().card()
            << " classes, topology preserved\n";
  const std::string mvs_name = out_mvs.empty() ? "quotient.mvs" : out_mvs;
  std::string mvs_ref = mvs_name;
  if (!out_qm.empty()) {
    std::error_code ec;
    const auto rel = std::filesystem::proximate(
        mvs_name, std::filesystem::path(out_qm).parent_path(), ec);
    if (!ec) {
      mvs_ref = rel.string();
    }
  }
  const std::string mvs_text = serialize(to_document(r.projection.codomain().raw()));
  const std::string qm_text = serialize(to_document(r.table, mvs_ref));
  if (!out_mvs.empty()) {
    write_file(out_mvs, mvs_text);
    std::cout << "wrote: " << out_mvs << "\n";
  }
  if (!out_qm.empty()) {
    write_file(out_qm, qm_text);
    std::cout << "wrote: " << out_qm << "\n";
  }
  if (out_mvs.empty()) {
    std::cout << "\n" << mvs_text;
  }
  if (out_qm.empty()) {
    std::cout << "\n" << qm_text;
  }
  return 0;
}

int cmd_words_eq(const std::string& file, const std::string& lhs, const std::string& rhs,
                 const Settings& s) {
  const Presentation p = load_presentation(file);
  const Word u = p.parse_word(lhs);
  const Word v = p.parse_word(rhs);
  const WordsEqual res = words_equal(p, u, v, s.bound, word_budget(s));
  if (res.kind == TriKind::Proved) {
    std::cout << "PROVED: " << u.str() << " = " << v.str() << " at bound " << s.bound << "\n";
    std::cout << "chain:\n";
    const auto& ch = *res.chain;
    if (ch.via.empty()) {
      std::cout << "  " << ch.words[0].str() << "\n";
    }
    for (std::size_t i = 0; i < ch.via.size(); ++i) {
      std::cout << "  " << ch.words[i].str() << " -> " << ch.words[i + 1].str() << " via "
                << rel_str(p, ch.via[i]) << "\n";
    }
    return 0;
  }
  if (res.kind == TriKind::Refuted) {
    std::cout << "REFUTED: class of " << res.exact_side->str() << " is exact and disjoint\n";
    return 1;
  }
  if (s.max_model_size > 0) {
    const auto model = find_separating_model(p, u, v, s.max_model_size);
    if (model) {
      std::cout << "REFUTED: separated by a monoid model of size " << model->size << "\n";
      std::cout << "table:\n";
      for (const auto& row : model->table) {
        std::cout << " ";
        for (std::size_t x : row) {
          std::cout << " " << x;
        }
        std::cout << "\n";
      }
      std::cout << "assignment:\n";
      for (std::size_t l = 0; l < model->assignment.size(); ++l) {
        std::cout << "  " << p.alphabet().letter(static_cast<Letter>(l)) << " -> "
                  << model->assignment[l] << "\n";
      }
      std::cout << "eval: " << u.str() << " -> " << model->eval(u) << ", " << v.str()
                << " -> " << model->eval(v) << "\n";
      return 1;
    }
    std::cout << "UNKNOWN: not decided at bound " << s.bound
              << "; no separating model up to size " << s.max_model_size << "\n";
    return 3;
  }
  std::cout << "UNKNOWN: not decided at bound " << s.bound << "\n";
  return 3;
}

int cmd_words_m4(const std::string& file, const Settings& s) {
  const Presentation p = load_presentation(file);
  const M4Check r = check_m4(p, s.bound, word_budget(s));
  const Alphabet& al = p.alphabet();
  if (r.kind == TriKind::Proved) {
    std::cout << "M4 PROVED: every pair of letters has a common divisor\n";
    for (const auto& w : r.witnesses) {
      std::cout << "  (" << al.letter(w[0]) << ", " << al.letter(w[1]) << "): divisor "
                << al.letter(w[2]) << "\n";
    }
    return 0;
  }
  if (r.kind == TriKind::Refuted) {
    std::cout << "M4 REFUTED: no common divisor for " << al.letter((*r.failing_pair)[0])
              << " and " << al.letter((*r.failing_pair)[1]) << "\n";
    return 1;
  }
  std::cout << "UNKNOWN: pair (" << al.letter((*r.undecided_pair)[0]) << ", "
            << al.letter((*r.undecided_pair)[1]) << ") undecided at bound " << s.bound << "\n";
  return 3;
}

int cmd_present(const std::string& file) {
  const FiniteMvs m = load_mvs(file);
  const Presentation p = present_mvs(m);
  std::cout << "PRESENTATION: " << p.alphabet().size() << " letters, " << p.relations().size()
            << " relations\n";
  std::cout << "\n" << serialize(to_document(p));
  return 0;
}

int cmd_verify_rep(const std::string& file, const Settings& s) {
  const FiniteMvs m = load_mvs(file);
  const RepresentationCheck rc = verify_representation(m, s.bound, word_budget(s));
  if (!rc.ok) {
    std::cout << "REPRESENTATION FAILS: " << rc.failure << "\n";
    return 1;
  }
  std::cout << "REPRESENTATION: verified at bound " << s.bound << "\n";
  for (ElemId i = 0; i < m.card(); ++i) {
    std::cout << "  " << m.name(i) << " -> class " << rc.elem_class[i] << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for finite metric value sets"};
  app.require_subcommand(1);

  Settings s;
  app.add_option("--bound", s.bound, "word length bound for bounded procedures")
      ->capture_default_str();
  app.add_option("--budget", s.budget, "node budget for searches (0 = default)")
      ->capture_default_str();
  app.add_flag("--symmetric", s.symmetric, "restrict metrizability search to symmetric tables");
  app.add_option("--max-model-size", s.max_model_size,
                 "cap on separating monoid models (0 = skip)")
      ->capture_default_str();

  int rc = 0;
  std::function<int()> body;
  auto wire = [&](CLI::App* sub, std::function<int()> fn) {
    sub->fallthrough();
    sub->callback([&rc, fn = std::move(fn)]() {
      try {
        rc = fn();
      } catch (const Error& e) {
        std::cerr << "ERROR: " << e.what() << "\n";
        rc = 2;
      } catch (const std::exception& e) {
        std::cerr << "ERROR: " << e.what() << "\n";
        rc = 2;
      }
    });
  };

  static std::string a1, a2, a3, out_mvs, out_qm;
  a1.clear();
  a2.clear();
  a3.clear();

  auto* check = app.add_subcommand("check", "validate a value-set table against the axioms");
  check->add_option("file", a1, "mvs document")->required();
  wire(check, [&] { return cmd_check(a1); });

  auto* order = app.add_subcommand("order", "classify the induced divides-order");
  order->add_option("file", a1, "mvs document")->required();
  wire(order, [&] { return cmd_order(a1); });

  auto* quot = app.add_subcommand("quotient", "form the quotient by a congruence");
  quot->add_option("mvs", a1, "mvs document")->required();
  quot->add_option("relation", a2, "relation document")->required();
  wire(quot, [&] { return cmd_quotient(a1, a2); });

  auto* hc = app.add_subcommand("hom-check", "test a map for the homomorphism conditions");
  hc->add_option("file", a1, "map document")->required();
  wire(hc, [&] { return cmd_hom_check(a1); });

  auto* hk = app.add_subcommand("hom-kernel", "kernel congruence of a homomorphism");
  hk->add_option("file", a1, "map document")->required();
  wire(hk, [&] { return cmd_hom_kernel(a1); });

  auto* hi = app.add_subcommand("hom-image", "image of a homomorphism as a sub-value-set");
  hi->add_option("file", a1, "map document")->required();
  wire(hi, [&] { return cmd_hom_image(a1); });

  auto* iso = app.add_subcommand("iso", "search for an isomorphism between two value sets");
  iso->add_option("first", a1, "mvs document")->required();
  iso->add_option("second", a2, "mvs document")->required();
  wire(iso, [&] { return cmd_iso(a1, a2); });

  auto* fine = app.add_subcommand("fine", "test a homomorphism for fineness");
  fine->add_option("file", a1, "map document")->required();
  wire(fine, [&] { return cmd_fine(a1); });

  auto* adj = app.add_subcommand("adjoin-inf", "adjoin an absorbing top element");
  adj->add_option("file", a1, "mvs document")->required();
  wire(adj, [&] { return cmd_adjoin_inf(a1); });

  auto* qc = app.add_subcommand("qm-check", "test a distance table for the quasimetric conditions");
  qc->add_option("file", a1, "quasimetric document")->required();
  wire(qc, [&] { return cmd_qm_check(a1); });

  auto* topo = app.add_subcommand("topology", "induced topology of a quasimetric");
  topo->add_option("file", a1, "quasimetric document")->required();
  wire(topo, [&] { return cmd_topology(a1); });

  auto* finer = app.add_subcommand("finer", "compare two induced topologies");
  finer->add_option("first", a1, "quasimetric document")->required();
  finer->add_option("second", a2, "quasimetric document")->required();
  wire(finer, [&] { return cmd_finer(a1, a2); });

  auto* metr = app.add_subcommand("metrize", "search for a table inducing a given topology");
  metr->add_option("topology", a1, "topology document")->required();
  metr->add_option("mvs", a2, "mvs document")->required();
  wire(metr, [&] { return cmd_metrize(a1, a2, s); });

  auto* cqm = app.add_subcommand("canonical-qm", "canonical quasimetric of a value set");
  cqm->add_option("file", a1, "mvs document")->required();
  wire(cqm, [&] { return cmd_canonical_qm(a1); });

  auto* qm2 = app.add_subcommand("quotient-metrize",
                                 "push a table onto the mutual-order quotient");
  qm2->add_option("file", a1, "quasimetric document")->required();
  out_mvs.clear();
  out_qm.clear();
  qm2->add_option("--out-mvs", out_mvs, "write the quotient value set here");
  qm2->add_option("--out-qm", out_qm, "write the quotient table here");
  wire(qm2, [&] { return cmd_quotient_metrize(a1, out_mvs, out_qm); });

  auto* weq = app.add_subcommand("words-eq", "bounded word equality in a presentation");
  weq->add_option("file", a1, "presentation document")->required();
  weq->add_option("lhs", a2, "first word")->required();
  weq->add_option("rhs", a3, "second word")->required();
  wire(weq, [&] { return cmd_words_eq(a1, a2, a3, s); });

  auto* wm4 = app.add_subcommand("words-m4", "bounded common-divisor check on the quotient");
  wm4->add_option("file", a1, "presentation document")->required();
  wire(wm4, [&] { return cmd_words_m4(a1, s); });

  auto* pres = app.add_subcommand("present", "present a value set by its own elements");
  pres->add_option("file", a1, "mvs document")->required();
  wire(pres, [&] { return cmd_present(a1); });

  auto* vrep = app.add_subcommand("verify-rep", "replay the self-presentation of a value set");
  vrep->add_option("file", a1, "mvs document")->required();
  wire(vrep, [&] { return cmd_verify_rep(a1, s); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
