#include "rfg/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfg/atlas.hpp"
#include "rfg/certify.hpp"
#include "rfg/errors.hpp"
#include "rfg/finite_field.hpp"
#include "rfg/group_element.hpp"
#include "rfg/homomorphism.hpp"
#include "rfg/induction.hpp"
#include "rfg/presentation.hpp"
#include "rfg/quotient_search.hpp"
#include "rfg/target_group.hpp"
#include "rfg/word.hpp"

namespace rfg {

namespace {

using Json = nlohmann::ordered_json;

// All doubles leave the tool in this fixed form, so repeated runs agree
// byte for byte.
std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (std::string& piece : out) {
    piece = trim(piece);
    if (piece.empty()) throw InputError("empty entry in list '" + text + "'");
  }
  return out;
}

Presentation load_presentation(const RunConfig& cfg) {
  if (cfg.presentation_path.empty()) throw InputError(cfg.subcommand + " needs --pres");
  std::ifstream in(cfg.presentation_path);
  if (!in) throw InputError("cannot read presentation file '" + cfg.presentation_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return Presentation::parse(text.str());
}

// exact: the value is the true minimum. upper-bound: the catalog may miss a
// smaller detector. interval: the catalog was exhausted, so the true value
// is at least this large.
std::string value_tag(bool exact, bool exhausted) {
  if (exhausted) return "interval";
  return exact ? "exact" : "upper-bound";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string format_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fixed6(v.get<double>());
  return v.dump();
}

void render(std::ostream& out, const Json& doc, const std::vector<std::string>& cols,
            const std::string& format) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::vector<std::string>> lines;
  for (const Json& row : doc.at("rows")) {
    std::vector<std::string> line;
    line.reserve(cols.size());
    for (const std::string& c : cols) line.push_back(format_cell(row.at(c)));
    lines.push_back(std::move(line));
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_field(cols[i]);
    out << "\n";
    for (const std::vector<std::string>& line : lines) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_field(line[i]);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  for (const std::vector<std::string>& line : lines)
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i].size() > width[i]) width[i] = line[i].size();
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size(), ' ');
    }
    out << "\n";
  };
  emit(cols);
  for (const std::vector<std::string>& line : lines) emit(line);
}

void add_kv(Json& rows, const std::string& key, const Json& value, const std::string& tag) {
  Json row;
  row["key"] = key;
  row["value"] = value;
  row["tag"] = tag;
  rows.push_back(std::move(row));
}

Json growth_doc(const RunConfig& cfg, std::vector<std::string>& cols) {
  Presentation p = load_presentation(cfg);
  TargetClass cls = parse_target_class(cfg.target_class);
  TargetCatalog cat = build_catalog(cls, cfg.order_limit);
  GrowthTable t;
  if (cfg.generators.empty()) {
    t = growth(p, cfg.radius, cat, cfg.ball_budget, cfg.hom_budget, cfg.jobs);
  } else {
    std::vector<Word> gens;
    for (const std::string& s : split_list(cfg.generators, ','))
      gens.push_back(p.alphabet().parse_word(s));
    t = growth_over(p, gens, cfg.radius, cat, cfg.ball_budget, cfg.hom_budget, cfg.jobs);
  }

  Json doc;
  doc["subcommand"] = "growth";
  doc["presentation"] = p.print();
  doc["class"] = target_class_name(cls);
  doc["limit"] = cfg.order_limit;
  doc["radius"] = cfg.radius;
  doc["metric"] = cfg.generators.empty() ? "standard" : cfg.generators;
  Json rows = Json::array();
  for (const GrowthRow& r : t.rows) {
    Json row;
    row["m"] = r.m;
    row["class"] = target_class_name(cls);
    row["value"] = r.value;
    row["argmax_word"] = p.alphabet().print_word(r.argmax);
    row["witness_group"] = r.witness_group;
    row["exhausted_flag"] = r.exhausted;
    row["tag"] = value_tag(r.exact, r.exhausted);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  cols = {"m", "class", "value", "argmax_word", "witness_group", "exhausted_flag", "tag"};
  return doc;
}

Json detect_doc(const RunConfig& cfg, std::vector<std::string>& cols) {
  Presentation p = load_presentation(cfg);
  if (cfg.word.empty()) throw InputError("detect needs --word");
  Word gamma = p.alphabet().parse_word(cfg.word);
  TargetClass cls = parse_target_class(cfg.target_class);
  TargetCatalog cat = build_catalog(cls, cfg.order_limit);
  DetectionResult det = detect(gamma, p, cat, cfg.hom_budget);

  Json doc;
  doc["subcommand"] = "detect";
  doc["presentation"] = p.print();
  doc["word"] = p.alphabet().print_word(gamma);
  doc["class"] = target_class_name(cls);
  doc["limit"] = cfg.order_limit;
  if (det.witness) {
    Json imgs = Json::array();
    for (const GroupElement& e : det.witness->images) imgs.push_back(show_element(e));
    doc["witness_images"] = std::move(imgs);
  }
  Json row;
  row["word"] = p.alphabet().print_word(gamma);
  row["class"] = target_class_name(cls);
  row["order"] = det.order;
  row["witness_group"] = det.witness ? det.witness->target.name() : "";
  row["exhausted_flag"] = det.exhausted;
  row["tag"] = value_tag(det.exact, det.exhausted);
  doc["rows"] = Json::array({std::move(row)});
  cols = {"word", "class", "order", "witness_group", "exhausted_flag", "tag"};
  return doc;
}

FamilyId resolve_family(const RunConfig& cfg) {
  if (cfg.family.empty()) throw InputError("atlas needs --family");
  std::string text = cfg.family;
  if (text.find('(') == std::string::npos) {
    std::vector<long> args;
    if (cfg.family_n > 0) args.push_back(cfg.family_n);
    if (cfg.family_q > 0) args.push_back(cfg.family_q);
    if (!args.empty()) {
      text += "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(args[i]);
      }
      text += ")";
    }
  }
  return parse_family(text);
}

std::string exp_bound_text(const ExpBound& b, long q) {
  std::string base = std::to_string(q);
  if (b.approx) return "~" + base + "^" + std::to_string(b.lo);
  return "(" + base + "^" + std::to_string(b.lo) + ", " + base + "^" + std::to_string(b.hi) + ")";
}

Json bound_json(const ExpBound& b) {
  Json j;
  j["lo"] = b.lo;
  j["hi"] = b.hi;
  j["approx"] = b.approx;
  return j;
}

Json rank_json(const RankValue& r) {
  Json j;
  if (r.exact) j["exact"] = *r.exact;
  if (r.range) j["range"] = Json::array({r.range->first, r.range->second});
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void add_rank_rows(Json& rows, const std::string& key, const RankValue& r) {
  if (r.exact) {
    add_kv(rows, key, *r.exact, "exact");
  } else if (r.range) {
    add_kv(rows, key,
           "[" + std::to_string(r.range->first) + ", " + std::to_string(r.range->second) + "]",
           "interval");
  }
  if (!r.note.empty()) add_kv(rows, key + "_note", r.note, "exact");
}

Json atlas_doc(const RunConfig& cfg, std::vector<std::string>& cols) {
  FamilyId id = resolve_family(cfg);
  AtlasEntry e = atlas_entry(id);
  RatioReport rr = ratio(id, cfg.scan_budget);

  Json doc;
  doc["subcommand"] = "atlas";
  doc["family"] = family_name(id);
  Json entry;
  entry["family"] = family_name(e.family);
  entry["simple"] = e.simple;
  entry["order_exact"] = e.order_exact ? Json(e.order_exact->str()) : Json();
  entry["order_bound"] = e.order_bound ? bound_json(*e.order_bound) : Json();
  entry["m1_exact"] = e.m1_exact ? Json(e.m1_exact->str()) : Json();
  entry["m1_bound"] = e.m1_bound ? bound_json(*e.m1_bound) : Json();
  entry["m1_log_approx"] = e.m1_log_approx ? Json(*e.m1_log_approx) : Json();
  entry["r"] = rank_json(e.r);
  entry["r_fl"] = rank_json(e.r_fl);
  entry["notes"] = e.notes;
  doc["entry"] = std::move(entry);

  Json ratio_j;
  if (rr.exact) ratio_j["exact"] = *rr.exact;
  if (rr.lower) ratio_j["lower"] = *rr.lower;
  if (rr.upper) ratio_j["upper"] = *rr.upper;
  ratio_j["lower_strict"] = rr.lower_strict;
  ratio_j["upper_strict"] = rr.upper_strict;
  ratio_j["approx"] = rr.approx;
  if (rr.passes) ratio_j["passes"] = *rr.passes;
  doc["ratio"] = std::move(ratio_j);

  Json rows = Json::array();
  add_kv(rows, "family", family_name(id), "exact");
  add_kv(rows, "simple", e.simple, "exact");
  if (e.order_exact) {
    add_kv(rows, "order", e.order_exact->str(), "exact");
  } else if (e.order_bound) {
    add_kv(rows, "order", exp_bound_text(*e.order_bound, id.q), "interval");
  }
  if (e.m1_exact) {
    add_kv(rows, "m1", e.m1_exact->str(), "exact");
  } else if (e.m1_bound) {
    add_kv(rows, "m1", exp_bound_text(*e.m1_bound, id.q), "interval");
  }
  if (e.m1_log_approx) add_kv(rows, "m1_log_approx", *e.m1_log_approx, "interval");
  add_rank_rows(rows, "r", e.r);
  add_rank_rows(rows, "r_fl", e.r_fl);
  if (rr.exact) add_kv(rows, "ratio", *rr.exact, "exact");
  if (rr.lower) add_kv(rows, "ratio_lower", *rr.lower, "interval");
  if (rr.upper) add_kv(rows, "ratio_upper", *rr.upper, "interval");
  if (rr.passes) add_kv(rows, "ratio_passes", *rr.passes, "exact");
  if (!e.notes.empty()) add_kv(rows, "notes", e.notes, "exact");
  doc["rows"] = std::move(rows);
  cols = {"key", "value", "tag"};
  return doc;
}

Json certify_doc(const RunConfig& cfg, std::vector<std::string>& cols) {
  Presentation p = load_presentation(cfg);
  Json doc;
  doc["subcommand"] = "certify";
  doc["presentation"] = p.print();
  Json rows = Json::array();

  if (cfg.members.empty()) {
    doc["mode"] = "small-cancellation";
    ScCheck c = p.certify();
    Json cert;
    cert["certified"] = c.certified;
    cert["lambda"] = std::to_string(c.lambda.num) + "/" + std::to_string(c.lambda.den);
    cert["max_piece"] = c.max_piece;
    cert["per_relator_max"] = c.per_relator_max;
    if (c.violation) {
      Json v;
      v["relator_index"] = c.violation->relator_index;
      v["piece"] = p.alphabet().print_word(c.violation->piece);
      v["relator_length"] = c.violation->relator_length;
      cert["violation"] = std::move(v);
    } else {
      cert["violation"] = Json();
    }
    doc["certificate"] = std::move(cert);

    add_kv(rows, "certified", c.certified, "exact");
    add_kv(rows, "lambda", std::to_string(c.lambda.num) + "/" + std::to_string(c.lambda.den),
           "exact");
    add_kv(rows, "max_piece", c.max_piece, "exact");
    add_kv(rows, "relators", p.relators().size(), "exact");
    for (std::size_t i = 0; i < c.per_relator_max.size(); ++i)
      add_kv(rows, "relator_" + std::to_string(i + 1) + "_max_piece", c.per_relator_max[i],
             "exact");
    if (c.violation) {
      add_kv(rows, "violation_relator", c.violation->relator_index + 1, "exact");
      add_kv(rows, "violation_piece", p.alphabet().print_word(c.violation->piece), "exact");
    }
  } else {
    doc["mode"] = "common-multiple";
    std::vector<Word> t_set;
    for (const std::string& s : split_list(cfg.members, ','))
      t_set.push_back(p.alphabet().parse_word(s));
    Json tj = Json::array();
    for (const Word& w : t_set) tj.push_back(p.alphabet().print_word(w));
    doc["t_set"] = std::move(tj);
    doc["kmax"] = cfg.k_max;

    CommonMultiple cm = common_multiple(t_set, cfg.k_max, p);
    std::string failure;
    bool ok = verify_witness(cm, &failure);
    LcmAudit audit = lcm_length_audit(t_set, cm, cfg.k_max);

    Json cert;
    cert["word"] = p.alphabet().print_word(cm.word);
    cert["length"] = cm.word.length();
    cert["radius"] = cm.radius;
    cert["verified"] = ok;
    Json wits = Json::array();
    for (std::size_t i = 0; i < cm.witnesses.size(); ++i) {
      Json w;
      w["member"] = p.alphabet().print_word(cm.t_set[i]);
      w["base"] = p.alphabet().print_word(cm.witnesses[i].base);
      Json fs = Json::array();
      for (const ConjugateFactor& f : cm.witnesses[i].factors) {
        Json fj;
        fj["conjugator"] = p.alphabet().print_word(f.conjugator);
        fj["sign"] = f.sign;
        fs.push_back(std::move(fj));
      }
      w["factors"] = std::move(fs);
      wits.push_back(std::move(w));
    }
    cert["witnesses"] = std::move(wits);
    Json aj;
    aj["d"] = audit.d;
    aj["t"] = audit.t;
    aj["length"] = audit.length;
    aj["cap"] = audit.cap;
    aj["fitted"] = audit.fitted;
    cert["audit"] = std::move(aj);
    doc["certificate"] = std::move(cert);

    add_kv(rows, "common_multiple", p.alphabet().print_word(cm.word), "exact");
    add_kv(rows, "length", cm.word.length(), "exact");
    add_kv(rows, "radius", cm.radius, "exact");
    add_kv(rows, "verified", ok, "exact");
    if (!ok) add_kv(rows, "first_failure", failure, "exact");
    add_kv(rows, "witness_count", cm.witnesses.size(), "exact");
    add_kv(rows, "audit_cap", audit.cap, "exact");
    add_kv(rows, "audit_fitted", audit.fitted, "exact");
  }
  doc["rows"] = std::move(rows);
  cols = {"key", "value", "tag"};
  return doc;
}

GroupElement parse_image(const TargetGroup& g, const std::string& text) {
  switch (g.kind()) {
    case GroupKind::Cyclic:
    case GroupKind::Dihedral:
    case GroupKind::Sym:
    case GroupKind::Alt:
      return GroupElement(parse_permutation(text));
    case GroupKind::GL:
    case GroupKind::SL:
      return GroupElement(parse_matrix(FiniteField::of(g.q()), text));
    case GroupKind::PSL:
    case GroupKind::PGL:
      return GroupElement(ProjectiveClass::of(parse_matrix(FiniteField::of(g.q()), text)));
  }
  throw InternalError("unhandled group kind");
}

Json induce_doc(const RunConfig& cfg, std::vector<std::string>& cols) {
  Presentation p = load_presentation(cfg);
  if (cfg.target.empty()) throw InputError("induce needs --target");
  if (cfg.images.empty()) throw InputError("induce needs --images");
  TargetGroup tg = TargetGroup::parse(cfg.target);
  std::vector<GroupElement> images;
  for (const std::string& s : split_list(cfg.images, ';')) images.push_back(parse_image(tg, s));
  Homomorphism h = make_homomorphism(p, tg, std::move(images));
  CosetStructure cs = coset_structure(p, h);
  std::vector<Word> sgens = schreier_generators(cs);

  Json doc;
  doc["subcommand"] = "induce";
  doc["presentation"] = p.print();
  doc["target"] = tg.name();
  doc["index"] = cs.index();
  Json tv = Json::array();
  for (const Word& w : cs.transversal) tv.push_back(p.alphabet().print_word(w));
  doc["transversal"] = std::move(tv);
  Json sg = Json::array();
  for (const Word& w : sgens) sg.push_back(p.alphabet().print_word(w));
  doc["schreier_generators"] = std::move(sg);

  Json rows = Json::array();
  add_kv(rows, "index", cs.index(), "exact");
  add_kv(rows, "schreier_rank", sgens.size(), "exact");
  for (std::size_t i = 0; i < sgens.size(); ++i)
    add_kv(rows, "sgen_" + std::to_string(i + 1), p.alphabet().print_word(sgens[i]), "exact");

  if (!cfg.base.empty()) {
    if (cfg.base_q < 2) throw InputError("induce needs --base-q at least 2 with --base");
    const FiniteField& f = FiniteField::of(cfg.base_q);
    std::vector<Matrix> base;
    for (const std::string& s : split_list(cfg.base, ';')) base.push_back(parse_matrix(f, s));
    InducedRep rep = induce(cs, base);
    doc["dim"] = rep.dim;
    doc["q"] = rep.q;
    Json imgs;
    for (int g = 1; g <= p.rank(); ++g)
      imgs[p.alphabet().name(g)] = show_element(GroupElement(rep.images[g - 1]));
    doc["images"] = std::move(imgs);
    InductionSizeCheck sc =
        induction_size_check(rep.base_dim, static_cast<long>(rep.index), rep.q);
    Json scj;
    scj["n"] = sc.n;
    scj["ell"] = sc.ell;
    scj["q"] = sc.q;
    scj["base_order"] = sc.base_order.str();
    scj["induced_order"] = sc.induced_order.str();
    scj["bound"] = sc.bound.str();
    scj["ok"] = sc.ok;
    scj["asserted"] = sc.asserted;
    doc["size_check"] = std::move(scj);

    add_kv(rows, "dim", rep.dim, "exact");
    add_kv(rows, "q", rep.q, "exact");
    for (int g = 1; g <= p.rank(); ++g)
      add_kv(rows, "image_" + p.alphabet().name(g),
             show_element(GroupElement(rep.images[g - 1])), "exact");
    add_kv(rows, "induced_order", sc.induced_order.str(), "exact");
    add_kv(rows, "size_bound", sc.bound.str(), "exact");
    add_kv(rows, "size_ok", sc.ok, "exact");
    add_kv(rows, "size_asserted", sc.asserted, "exact");
  }
  doc["rows"] = std::move(rows);
  cols = {"key", "value", "tag"};
  return doc;
}

Json experiment_doc(const RunConfig& cfg, std::vector<std::string>& cols) {
  Presentation p = load_presentation(cfg);
  if (cfg.word.empty() || cfg.word0.empty())
    throw InputError("experiment needs --word and --word0");
  Word gamma = p.alphabet().parse_word(cfg.word);
  Word gamma0 = p.alphabet().parse_word(cfg.word0);
  TargetClass cls = parse_target_class(cfg.target_class);
  TargetCatalog cat = build_catalog(cls, cfg.order_limit);
  RatioCurve curve = ratio_experiment(gamma, gamma0, cfg.j_max, cfg.k_max, p, cat, cfg.hom_budget);

  Json doc;
  doc["subcommand"] = "experiment";
  doc["presentation"] = p.print();
  doc["word"] = p.alphabet().print_word(gamma);
  doc["word0"] = p.alphabet().print_word(gamma0);
  doc["jmax"] = cfg.j_max;
  doc["kmax"] = cfg.k_max;
  doc["class"] = target_class_name(cls);
  doc["limit"] = cfg.order_limit;
  doc["truncated"] = curve.truncated;
  Json rows = Json::array();
  for (const RatioPoint& pt : curve.points) {
    Json row;
    row["j"] = pt.j;
    row["eta_length"] = pt.eta_length;
    row["fitted_cubic"] = pt.fitted_cubic;
    row["detected_order"] = pt.detected_order;
    row["witness_group"] = pt.witness_group;
    row["image_order"] = pt.image_order;
    row["ratio"] = pt.ratio;
    row["exhausted_flag"] = pt.exhausted;
    row["tag"] = value_tag(pt.exact, pt.exhausted);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  cols = {"j",           "eta_length",  "fitted_cubic",   "detected_order", "witness_group",
          "image_order", "ratio",       "exhausted_flag", "tag"};
  return doc;
}

void validate(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "table")
    throw InputError("unknown format '" + cfg.format + "'; expected csv, json, or table");
  if (cfg.ball_budget == 0 || cfg.scan_budget == 0 || cfg.hom_budget == 0)
    throw InputError("budgets must be positive");
  if (cfg.jobs == 0) throw InputError("parallelism degree must be positive");
}

int fail(std::ostream& err, const std::string& kind, const std::string& message, ExitCode code) {
  Json rec;
  rec["error"] = kind;
  rec["message"] = message;
  err << rec.dump() << "\n";
  return static_cast<int>(code);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    Json doc;
    std::vector<std::string> cols;
    if (cfg.subcommand == "growth") {
      doc = growth_doc(cfg, cols);
    } else if (cfg.subcommand == "detect") {
      doc = detect_doc(cfg, cols);
    } else if (cfg.subcommand == "atlas") {
      doc = atlas_doc(cfg, cols);
    } else if (cfg.subcommand == "certify") {
      doc = certify_doc(cfg, cols);
    } else if (cfg.subcommand == "induce") {
      doc = induce_doc(cfg, cols);
    } else if (cfg.subcommand == "experiment") {
      doc = experiment_doc(cfg, cols);
    } else {
      throw InputError("unknown subcommand '" + cfg.subcommand +
                       "'; expected atlas, certify, detect, experiment, growth, or induce");
    }
    render(out, doc, cols, cfg.format);
    return static_cast<int>(ExitCode::Ok);
  } catch (const InputError& e) {
    return fail(err, "input", e.what(), ExitCode::Input);
  } catch (const DomainError& e) {
    return fail(err, "domain", e.what(), ExitCode::Domain);
  } catch (const ResourceError& e) {
    return fail(err, "resource", e.what(), ExitCode::Resource);
  } catch (const UnsupportedError& e) {
    return fail(err, "unsupported", e.what(), ExitCode::Unsupported);
  } catch (const SearchExhaustedError& e) {
    return fail(err, "search-exhausted", e.what(), ExitCode::SearchExhausted);
  } catch (const MembershipError& e) {
    return fail(err, "membership", e.what(), ExitCode::Membership);
  } catch (const ConstructionError& e) {
    return fail(err, "construction", e.what(), ExitCode::Construction);
  } catch (const InternalError& e) {
    return fail(err, "internal", e.what(), ExitCode::Internal);
  } catch (const std::exception& e) {
    return fail(err, "unknown", e.what(), ExitCode::Unknown);
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"residual finiteness growth over finite quotient catalogs"};
  app.name("rfgrow");
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value defaults; command-line flags override the file");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads for detection scans")->capture_default_str();
  app.add_option("--ball-budget", cfg.ball_budget, "largest ball enumerated")
      ->capture_default_str();
  app.add_option("--scan-budget", cfg.scan_budget, "largest group scanned element by element")
      ->capture_default_str();
  app.add_option("--hom-budget", cfg.hom_budget, "largest image tuple count per group")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "reserved; all algorithms are deterministic");

  CLI::App* growth_cmd = app.add_subcommand("growth", "detection growth table over balls");
  growth_cmd->fallthrough();
  growth_cmd->add_option("--pres", cfg.presentation_path, "presentation file")->required();
  growth_cmd->add_option("--class", cfg.target_class, "ALL, GL, or SIMPLE")
      ->capture_default_str();
  growth_cmd->add_option("--limit", cfg.order_limit, "catalog order limit")
      ->capture_default_str();
  growth_cmd->add_option("--radius", cfg.radius, "largest ball radius")->capture_default_str();
  growth_cmd->add_option("--gens", cfg.generators,
                         "comma-separated generating set; measures its word metric");

  CLI::App* detect_cmd =
      app.add_subcommand("detect", "least catalog quotient separating one element");
  detect_cmd->fallthrough();
  detect_cmd->add_option("--pres", cfg.presentation_path, "presentation file")->required();
  detect_cmd->add_option("--word", cfg.word, "element to detect")->required();
  detect_cmd->add_option("--class", cfg.target_class, "ALL, GL, or SIMPLE")
      ->capture_default_str();
  detect_cmd->add_option("--limit", cfg.order_limit, "catalog order limit")
      ->capture_default_str();

  CLI::App* atlas_cmd =
      app.add_subcommand("atlas", "order, element-order, and rank data for one family");
  atlas_cmd->fallthrough();
  atlas_cmd->add_option("--family", cfg.family, "family letter or full name, e.g. C or C(4,3)")
      ->required();
  atlas_cmd->add_option("--n", cfg.family_n, "rank or degree");
  atlas_cmd->add_option("--q", cfg.family_q, "field size or prime");

  CLI::App* certify_cmd =
      app.add_subcommand("certify", "small-cancellation certificate or common multiple");
  certify_cmd->fallthrough();
  certify_cmd->add_option("--pres", cfg.presentation_path, "presentation file")->required();
  certify_cmd->add_option("--words", cfg.members,
                          "comma-separated set to certify a common multiple for");
  certify_cmd->add_option("--kmax", cfg.k_max, "largest conjugator length")
      ->capture_default_str();

  CLI::App* induce_cmd =
      app.add_subcommand("induce", "Schreier coset data and induced representation");
  induce_cmd->fallthrough();
  induce_cmd->add_option("--pres", cfg.presentation_path, "presentation file")->required();
  induce_cmd->add_option("--target", cfg.target, "finite quotient, e.g. Sym(3)")->required();
  induce_cmd->add_option("--images", cfg.images, "';'-separated generator images")->required();
  induce_cmd->add_option("--base", cfg.base, "';'-separated base matrices for the kernel");
  induce_cmd->add_option("--base-q", cfg.base_q, "field of the base matrices");

  CLI::App* exp_cmd = app.add_subcommand("experiment", "common-multiple ratio curve over j");
  exp_cmd->fallthrough();
  exp_cmd->add_option("--pres", cfg.presentation_path, "presentation file")->required();
  exp_cmd->add_option("--word", cfg.word, "element whose conjugates build the set")->required();
  exp_cmd->add_option("--word0", cfg.word0, "element whose powers build the set")->required();
  exp_cmd->add_option("--jmax", cfg.j_max, "largest j")->capture_default_str();
  exp_cmd->add_option("--kmax", cfg.k_max, "largest conjugator length")->capture_default_str();
  exp_cmd->add_option("--class", cfg.target_class, "GL or SIMPLE");
  exp_cmd->add_option("--limit", cfg.order_limit, "catalog order limit")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return fail(err, "input", e.what(), ExitCode::Input);
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace rfg
