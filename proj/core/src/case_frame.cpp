// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/case_frame.hpp"

#include <algorithm>

#include "serbest/turkish.hpp"

namespace serbest {

namespace {

struct RoleName {
  Role role;
  std::string_view name;
};

constexpr RoleName kRoleNames[] = {
    {Role::subject, "subject"},       {Role::time, "time"},
    {Role::place, "place"},           {Role::dir_obj, "dir-obj"},
    {Role::beneficiary, "beneficiary"}, {Role::source, "source"},
    {Role::goal, "goal"},             {Role::location, "location"},
    {Role::instrument, "instrument"}, {Role::value, "value"},
    {Role::path, "path"},             {Role::duration, "duration"},
    {Role::manner, "manner"},
};

bool atom_in(const Value& v, std::initializer_list<std::string_view> allowed) {
  if (!v.is_atom()) return false;
  for (auto a : allowed) {
    if (v.atom().name == a) return true;
  }
  return false;
}

std::string join_path(const std::string& base, std::string_view leaf) {
  if (base.empty()) return std::string(leaf);
  return base + "." + std::string(leaf);
}

// Collects violations across the whole walk, canonicalizing as it goes.
struct Validator {
  std::vector<SchemaViolation> violations;

  void add(std::string code, std::string path, std::string message) {
    violations.push_back({std::move(code), std::move(path), std::move(message)});
  }

  void check_enum(const FeatureStructure& fs, std::string_view feature,
                  std::initializer_list<std::string_view> allowed, const std::string& path,
                  FeatureStructure& out) {
    const Value* v = fs.find(feature);
    if (!v) return;
    if (!atom_in(*v, allowed)) {
      add("bad-enum-value", join_path(path, feature),
          "expected one of the documented atoms, got " + print_value_compact(*v));
      return;
    }
    out.set(feature, *v);
  }

  // +/- valued feature
  void check_sign(const FeatureStructure& fs, std::string_view feature, const std::string& path,
                  FeatureStructure& out) {
    check_enum(fs, feature, {"+", "-"}, path, out);
  }

  // (agr 1sg) or (agr ((person 1) (number sg)))
  void canonical_agr(const Value& v, const std::string& path, FeatureStructure& out) {
    FeatureStructure agr;
    if (v.is_atom()) {
      const std::string& a = v.atom().name;
      if (a.size() == 3 && a[0] >= '1' && a[0] <= '3' &&
          (a.substr(1) == "sg" || a.substr(1) == "pl")) {
        agr.set("person", Value(Atom{std::string(1, a[0])}));
        agr.set("number", Value(Atom{a.substr(1)}));
        out.set("agr", Value(std::move(agr)));
        return;
      }
      add("bad-enum-value", path, "agreement shorthand must be like 1sg or 3pl");
      return;
    }
    if (!v.is_fs()) {
      add("bad-enum-value", path, "agr must be an atom shorthand or a structure");
      return;
    }
    check_enum(v.fs(), "person", {"1", "2", "3"}, path, agr);
    check_enum(v.fs(), "number", {"sg", "pl"}, path, agr);
    for (const auto& e : v.fs().entries()) {
      if (e.name != "person" && e.name != "number") {
        add("unknown-feature", join_path(path, e.name), "unknown agr field");
      }
    }
    out.set("agr", Value(std::move(agr)));
  }

  Value as_list(const Value& v) {
    if (v.is_list()) return v;
    return Value(ValueList{v});
  }

  FeatureStructure canonical_np(const FeatureStructure& raw, const std::string& path);

  // An atom or text expands to a bare-head noun phrase.
  Value canonical_constituent(const Value& v, const std::string& path) {
    if (v.is_atom() || v.is_text()) {
      FeatureStructure ref;
      ref.set("arg", v.is_atom() ? v : Value(Atom{turkish::to_lower(v.text().text)}));
      FeatureStructure np;
      np.set("ref", Value(std::move(ref)));
      return Value(std::move(np));
    }
    if (!v.is_fs()) {
      add("bad-enum-value", path, "constituent must be an atom or a structure");
      return v;
    }
    if (v.fs().find("verb")) {
      return Value(canonical_frame(v.fs(), path));  // embedded clause
    }
    return Value(canonical_np(v.fs(), path));
  }

  FeatureStructure canonical_frame(const FeatureStructure& raw, const std::string& path);
};

FeatureStructure Validator::canonical_np(const FeatureStructure& raw, const std::string& path) {
  FeatureStructure np;

  const Value* ref = raw.find("ref");
  if (!ref) {
    add("missing-ref", path, "noun phrase has no ref feature");
  } else if (!ref->is_fs()) {
    add("bad-enum-value", join_path(path, "ref"), "ref must be a structure");
  } else {
    FeatureStructure cref;
    const FeatureStructure& rfs = ref->fs();
    if (const Value* arg = rfs.find("arg")) {
      if (arg->is_atom()) {
        cref.set("arg", *arg);
      } else if (arg->is_text()) {
        cref.set("arg", Value(Atom{turkish::to_lower(arg->text().text)}));
      } else {
        add("bad-enum-value", join_path(path, "ref.arg"), "arg must be a lexeme token");
      }
    } else {
      add("missing-ref", join_path(path, "ref"), "ref.arg is required");
    }
    if (const Value* agr = rfs.find("agr")) {
      canonical_agr(*agr, join_path(path, "ref.agr"), cref);
    }
    if (const Value* control = rfs.find("control")) {
      if (control->is_fs()) {
        FeatureStructure cc;
        check_sign(control->fs(), "drop", join_path(path, "ref.control"), cc);
        cref.set("control", Value(std::move(cc)));
      } else {
        add("bad-enum-value", join_path(path, "ref.control"), "control must be a structure");
      }
    }
    np.set("ref", Value(std::move(cref)));
  }

  if (const Value* cls = raw.find("class")) {
    if (cls->is_atom()) np.set("class", *cls);
    else add("bad-enum-value", join_path(path, "class"), "classifier must be a lexeme token");
  }

  // Gapped sentential modifiers are schema-accepted and rejected only at
  // realization, so the structure passes through untouched.
  if (const Value* roles = raw.find("roles")) np.set("roles", *roles);

  if (const Value* modf = raw.find("modf")) {
    if (!modf->is_fs()) {
      add("bad-enum-value", join_path(path, "modf"), "modf must be a structure");
    } else {
      FeatureStructure cm;
      const FeatureStructure& m = modf->fs();
      if (const Value* v = m.find("mod-rel")) cm.set("mod-rel", as_list(*v));
      if (const Value* v = m.find("ordinal")) {
        if (!v->is_fs()) {
          add("bad-enum-value", join_path(path, "modf.ordinal"), "ordinal must be a structure");
        } else {
          FeatureStructure co;
          if (const Value* pos = v->fs().find("position")) {
            bool ok = pos->is_atom() && !pos->atom().name.empty() &&
                      pos->atom().name.find_first_not_of("0123456789") == std::string::npos &&
                      pos->atom().name != "0";
            if (ok) co.set("position", *pos);
            else add("bad-enum-value", join_path(path, "modf.ordinal.position"),
                     "position must be an integer >= 1");
          } else {
            add("bad-enum-value", join_path(path, "modf.ordinal"), "ordinal needs a position");
          }
          check_sign(v->fs(), "intensifier", join_path(path, "modf.ordinal"), co);
          cm.set("ordinal", Value(std::move(co)));
        }
      }
      if (const Value* v = m.find("quant-mod")) {
        if (v->is_atom()) cm.set("quant-mod", *v);
        else add("bad-enum-value", join_path(path, "modf.quant-mod"),
                 "quantitative modifier must be a token");
      }
      if (const Value* v = m.find("qualy-mod")) cm.set("qualy-mod", as_list(*v));
      if (const Value* v = m.find("control")) {
        if (v->is_fs()) {
          FeatureStructure cc;
          check_enum(v->fs(), "emphasis", {"quant", "qual"}, join_path(path, "modf.control"), cc);
          cm.set("control", Value(std::move(cc)));
        } else {
          add("bad-enum-value", join_path(path, "modf.control"), "control must be a structure");
        }
      }
      np.set("modf", Value(std::move(cm)));
    }
  }

  if (const Value* spec = raw.find("spec")) {
    if (!spec->is_fs()) {
      add("bad-enum-value", join_path(path, "spec"), "spec must be a structure");
    } else {
      FeatureStructure cs;
      const FeatureStructure& s = spec->fs();
      if (const Value* det = s.find("det")) {
        if (!det->is_fs()) {
          add("bad-enum-value", join_path(path, "spec.det"), "det must be a structure");
        } else {
          FeatureStructure cd;
          if (const Value* q = det->fs().find("quantifier")) {
            if (q->is_atom()) cd.set("quantifier", *q);
            else add("bad-enum-value", join_path(path, "spec.det.quantifier"),
                     "quantifier must be a token");
          }
          check_sign(det->fs(), "definite", join_path(path, "spec.det"), cd);
          check_sign(det->fs(), "referential", join_path(path, "spec.det"), cd);
          check_sign(det->fs(), "specific", join_path(path, "spec.det"), cd);
          cs.set("det", Value(std::move(cd)));
        }
      }
      if (const Value* v = s.find("set-spec")) {
        Value listed = as_list(*v);
        ValueList items;
        for (const auto& item : listed.list()) {
          items.push_back(canonical_constituent(item, join_path(path, "spec.set-spec")));
        }
        cs.set("set-spec", Value(std::move(items)));
      }
      if (const Value* v = s.find("spec-rel")) cs.set("spec-rel", as_list(*v));
      if (const Value* v = s.find("demons")) {
        if (v->is_atom()) cs.set("demons", *v);
        else add("bad-enum-value", join_path(path, "spec.demons"),
                 "demonstrative must be a lexeme token");
      }
      np.set("spec", Value(std::move(cs)));
    }
  }

  if (const Value* poss = raw.find("poss")) {
    if (!poss->is_fs()) {
      add("bad-enum-value", join_path(path, "poss"), "poss must be a structure");
    } else {
      FeatureStructure cp;
      if (const Value* arg = poss->fs().find("argument")) {
        cp.set("argument", canonical_constituent(*arg, join_path(path, "poss.argument")));
      } else {
        add("missing-ref", join_path(path, "poss"), "poss.argument is required");
      }
      bool drop = false, move = false;
      if (const Value* control = poss->fs().find("control")) {
        if (control->is_fs()) {
          FeatureStructure cc;
          check_sign(control->fs(), "drop", join_path(path, "poss.control"), cc);
          check_sign(control->fs(), "move", join_path(path, "poss.control"), cc);
          if (const Value* d = cc.find("drop")) drop = d->atom().name == "+";
          if (const Value* m = cc.find("move")) move = m->atom().name == "+";
          cp.set("control", Value(std::move(cc)));
        } else {
          add("bad-enum-value", join_path(path, "poss.control"), "control must be a structure");
        }
      }
      if (drop && move) {
        add("bad-enum-value", join_path(path, "poss.control"),
            "drop and move cannot both be +");
      }
      np.set("poss", Value(std::move(cp)));
    }
  }

  if (const Value* kase = raw.find("case")) {
    if (atom_in(*kase, {"nom", "acc", "dat", "loc", "abl", "gen", "ins"})) np.set("case", *kase);
    else add("bad-enum-value", join_path(path, "case"), "unknown case");
  }

  for (const auto& e : raw.entries()) {
    static constexpr std::string_view known[] = {"ref", "class", "roles", "modf",
                                                 "spec", "poss", "case"};
    if (std::find(std::begin(known), std::end(known), e.name) == std::end(known)) {
      add("unknown-feature", join_path(path, e.name), "unknown noun-phrase feature");
    }
  }
  return np;
}

FeatureStructure Validator::canonical_frame(const FeatureStructure& raw,
                                            const std::string& path) {
  FeatureStructure out;

  check_enum(raw, "s-form", {"finite", "infinitive", "adverbial", "participle"}, path, out);
  check_enum(raw, "clause-type", {"predicative", "attributive", "existential"}, path, out);
  check_enum(raw, "voice", {"active", "passive", "causative", "reflexive", "reciprocal"},
             path, out);
  check_enum(raw, "speech-act",
             {"declarative", "interrogative", "imperative", "optative", "necessitative", "wish"},
             path, out);

  if (const Value* ques = raw.find("ques")) {
    if (!ques->is_fs()) {
      add("bad-enum-value", join_path(path, "ques"), "ques must be a structure");
    } else {
      FeatureStructure cq;
      check_enum(ques->fs(), "type", {"yes-no", "wh"}, join_path(path, "ques"), cq);
      if (const Value* konst = ques->fs().find("const")) {
        Value listed = as_list(*konst);
        ValueList roles;
        for (const auto& item : listed.list()) {
          if (item.is_atom() && parse_role(item.atom().name)) {
            roles.push_back(item);
          } else {
            add("unknown-role", join_path(path, "ques.const"),
                "expected a role name, got " + print_value_compact(item));
          }
        }
        cq.set("const", Value(std::move(roles)));
      } else if (const Value* t = cq.find("type"); t && t->atom().name == "wh") {
        add("bad-enum-value", join_path(path, "ques"), "wh questions need a const role list");
      }
      out.set("ques", Value(std::move(cq)));
    }
  }

  // verb: SENSE is the example-structure spelling of POLARITY; a leading
  // '#' marks a lexeme reference and is stripped.
  if (const Value* verb = raw.find("verb")) {
    if (!verb->is_fs()) {
      add("bad-enum-value", join_path(path, "verb"), "verb must be a structure");
    } else {
      FeatureStructure cv;
      const FeatureStructure& v = verb->fs();
      if (const Value* root = v.find("root")) {
        std::string name;
        if (root->is_atom()) name = root->atom().name;
        else if (root->is_text()) name = turkish::to_lower(root->text().text);
        if (name.empty()) {
          add("bad-enum-value", join_path(path, "verb.root"), "root must be a lexeme token");
        } else {
          if (name.front() == '#') name.erase(0, 1);
          cv.set("root", Value(Atom{name}));
        }
      } else {
        add("missing-verb", join_path(path, "verb"), "verb.root is required");
      }
      FeatureStructure polarity_holder;
      check_enum(v, "polarity", {"positive", "negative"}, join_path(path, "verb"),
                 polarity_holder);
      check_enum(v, "sense", {"positive", "negative"}, join_path(path, "verb"),
                 polarity_holder);
      if (const Value* p = polarity_holder.find("polarity")) cv.set("polarity", *p);
      else if (const Value* s = polarity_holder.find("sense")) cv.set("polarity", *s);
      check_enum(v, "tense", {"past", "present", "future"}, join_path(path, "verb"), cv);
      check_enum(v, "aspect", {"perfect", "progressive", "habitual"}, join_path(path, "verb"),
                 cv);
      check_enum(v, "modality", {"potentiality"}, join_path(path, "verb"), cv);
      check_enum(v, "nominalizer", {"ma", "is"}, join_path(path, "verb"), cv);
      for (const auto& e : v.entries()) {
        static constexpr std::string_view known[] = {"root",   "polarity", "sense",
                                                     "tense",  "aspect",   "modality",
                                                     "nominalizer"};
        if (std::find(std::begin(known), std::end(known), e.name) == std::end(known)) {
          add("unknown-feature", join_path(path, "verb." + e.name), "unknown verb feature");
        }
      }
      out.set("verb", Value(std::move(cv)));
    }
  } else {
    add("missing-verb", path, "case frame has no verb");
  }

  // args/arguments and adjn/adjuncts are interchangeable on input.
  auto bucket = [&](std::initializer_list<std::string_view> names) -> const Value* {
    for (auto n : names) {
      if (const Value* v = raw.find(n)) return v;
    }
    return nullptr;
  };

  auto canonical_bucket = [&](const Value* v, bool argument_bucket, std::string_view canon) {
    if (!v) return;
    if (!v->is_fs()) {
      add("bad-enum-value", join_path(path, canon), "expected a role map");
      return;
    }
    FeatureStructure cb;
    // canonical role order within the bucket
    for (Role r : kDefaultOrder) {
      if (is_argument_role(r) != argument_bucket) continue;
      if (const Value* c = v->fs().find(role_name(r))) {
        cb.set(role_name(r),
               canonical_constituent(*c, join_path(path, std::string(canon) + "." +
                                                              std::string(role_name(r)))));
      }
    }
    for (const auto& e : v->fs().entries()) {
      auto r = parse_role(e.name);
      if (!r || is_argument_role(*r) != argument_bucket) {
        add("unknown-role", join_path(path, std::string(canon) + "." + e.name),
            "not a valid role for this bucket");
      }
    }
    if (!cb.empty() || !v->fs().empty()) out.set(canon, Value(std::move(cb)));
  };

  canonical_bucket(bucket({"arguments", "args"}), true, "arguments");
  canonical_bucket(bucket({"adjuncts", "adjn"}), false, "adjuncts");

  if (const Value* control = raw.find("control")) {
    if (!control->is_fs()) {
      add("bad-enum-value", join_path(path, "control"), "control must be a structure");
    } else {
      FeatureStructure cc;
      auto handle = [&](std::string_view name, std::string_view canon) {
        const Value* v = control->fs().find(name);
        if (!v) return;
        if (!v->is_atom() || !parse_role(v->atom().name)) {
          add("unknown-role", join_path(path, "control." + std::string(canon)),
              "control must name a role, got " + print_value_compact(*v));
          return;
        }
        Role r = *parse_role(v->atom().name);
        std::string bucket_name = is_argument_role(r) ? "arguments" : "adjuncts";
        const Value* b = out.find(bucket_name);
        bool present = b && b->is_fs() && b->fs().find(role_name(r));
        if (!present) {
          add("control-names-absent-constituent", join_path(path, "control." + std::string(canon)),
              "control names '" + std::string(role_name(r)) + "' but no such constituent exists");
          return;
        }
        cc.set(canon, *v);
      };
      handle("topic", "topic");
      handle("focus", "focus");
      handle("backgr", "backgr");
      handle("background", "backgr");  // example-structure spelling
      out.set("control", Value(std::move(cc)));
    }
  }

  if (const Value* kase = raw.find("case")) {
    if (atom_in(*kase, {"nom", "acc", "dat", "loc", "abl", "gen", "ins"})) out.set("case", *kase);
    else add("bad-enum-value", join_path(path, "case"), "unknown case");
  }

  for (const auto& e : raw.entries()) {
    static constexpr std::string_view known[] = {
        "s-form", "clause-type", "voice",    "speech-act", "ques",   "verb",
        "args",   "arguments",   "adjuncts", "adjn",       "control", "case"};
    if (std::find(std::begin(known), std::end(known), e.name) == std::end(known)) {
      add("unknown-feature", join_path(path, e.name), "unknown case-frame feature");
    }
  }
  return out;
}

ComplexSentence build_complex(Validator& v, const FeatureStructure& raw, const std::string& path);

CaseFrame make_frame(FeatureStructure fs);

}  // namespace

std::string_view role_name(Role r) {
  for (const auto& rn : kRoleNames) {
    if (rn.role == r) return rn.name;
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view token) {
  for (const auto& rn : kRoleNames) {
    if (rn.name == token) return rn.role;
  }
  return std::nullopt;
}

bool is_argument_role(Role r) {
  switch (r) {
    case Role::subject: case Role::dir_obj: case Role::source: case Role::goal:
    case Role::location: case Role::beneficiary: case Role::instrument: case Role::value:
      return true;
    default:
      return false;
  }
}

CaseFrame CaseFrame::from_fs(const FeatureStructure& raw) {
  Validator v;
  FeatureStructure canonical = v.canonical_frame(raw, "");
  if (!v.violations.empty()) throw SchemaError(std::move(v.violations));
  return CaseFrame(std::move(canonical));
}

namespace {

std::string atom_or(const FeatureStructure& fs, std::string_view feature,
                    std::string_view fallback) {
  if (const Value* v = fs.find(feature); v && v->is_atom()) return v->atom().name;
  return std::string(fallback);
}

}  // namespace

struct detail::CaseFrameAccess {
  static CaseFrame make(FeatureStructure fs) { return CaseFrame(std::move(fs)); }
};

namespace {

// Validator output is already canonical; bypass re-validation.
CaseFrame make_frame(FeatureStructure fs) {
  return detail::CaseFrameAccess::make(std::move(fs));
}

}  // namespace

std::string CaseFrame::s_form() const { return atom_or(fs_, "s-form", "finite"); }
std::string CaseFrame::clause_type() const { return atom_or(fs_, "clause-type", "predicative"); }
std::string CaseFrame::voice() const { return atom_or(fs_, "voice", "active"); }
std::string CaseFrame::speech_act() const { return atom_or(fs_, "speech-act", "declarative"); }

std::optional<QuesSpec> CaseFrame::ques() const {
  const Value* q = fs_.find("ques");
  if (!q || !q->is_fs()) return std::nullopt;
  QuesSpec spec;
  spec.type = atom_or(q->fs(), "type", "yes-no");
  if (const Value* konst = q->fs().find("const"); konst && konst->is_list()) {
    for (const auto& item : konst->list()) {
      if (item.is_atom()) {
        if (auto r = parse_role(item.atom().name)) spec.constituents.push_back(*r);
      }
    }
  }
  return spec;
}

VerbSpec CaseFrame::verb() const {
  VerbSpec spec;
  const Value* v = fs_.find("verb");
  if (!v || !v->is_fs()) return spec;
  spec.root = atom_or(v->fs(), "root", "");
  spec.polarity = atom_or(v->fs(), "polarity", "positive");
  spec.tense = atom_or(v->fs(), "tense", "present");
  if (const Value* a = v->fs().find("aspect"); a && a->is_atom()) spec.aspect = a->atom().name;
  if (const Value* m = v->fs().find("modality"); m && m->is_atom()) spec.modality = m->atom().name;
  if (const Value* n = v->fs().find("nominalizer"); n && n->is_atom()) {
    spec.nominalizer = n->atom().name;
  }
  return spec;
}

namespace {

std::optional<Role> control_role(const FeatureStructure& fs, std::string_view which) {
  const Value* c = fs.find("control");
  if (!c || !c->is_fs()) return std::nullopt;
  const Value* v = c->fs().find(which);
  if (!v || !v->is_atom()) return std::nullopt;
  return parse_role(v->atom().name);
}

}  // namespace

std::optional<Role> CaseFrame::topic() const { return control_role(fs_, "topic"); }
std::optional<Role> CaseFrame::focus() const { return control_role(fs_, "focus"); }
std::optional<Role> CaseFrame::backgr() const { return control_role(fs_, "backgr"); }

const Value* CaseFrame::constituent(Role r) const {
  const Value* bucket = fs_.find(is_argument_role(r) ? "arguments" : "adjuncts");
  if (!bucket || !bucket->is_fs()) return nullptr;
  return bucket->fs().find(role_name(r));
}

std::vector<std::pair<Role, const Value*>> CaseFrame::constituents() const {
  std::vector<std::pair<Role, const Value*>> out;
  for (Role r : kDefaultOrder) {
    if (const Value* c = constituent(r)) out.emplace_back(r, c);
  }
  return out;
}

std::vector<Role> CaseFrame::present_roles() const {
  std::vector<Role> out;
  for (const auto& [r, c] : constituents()) out.push_back(r);
  return out;
}

bool CaseFrame::is_sentential(const Value& constituent) {
  return constituent.is_fs() && constituent.fs().find("verb") != nullptr;
}

bool CaseFrame::is_indefinite_dirobj() const {
  const Value* obj = constituent(Role::dir_obj);
  if (!obj || is_sentential(*obj) || !obj->is_fs()) return false;
  const Value* definite = get(obj->fs(), Path{"spec", "det", "definite"});
  return definite && definite->is_atom() && definite->atom().name == "-";
}

namespace {

ComplexSentence build_complex(Validator& v, const FeatureStructure& raw,
                              const std::string& path) {
  ComplexSentence cs;
  const Value* type = raw.find("type");
  if (!type) {
    cs.type = ComplexSentence::Type::simple;
    cs.arg = make_frame(v.canonical_frame(raw, path));
    return cs;
  }
  if (!type->is_atom()) {
    v.add("bad-enum-value", join_path(path, "type"), "type must be an atom");
    return cs;
  }
  const std::string& t = type->atom().name;
  auto expect_only = [&](std::initializer_list<std::string_view> allowed) {
    for (const auto& e : raw.entries()) {
      if (std::find(allowed.begin(), allowed.end(), e.name) == allowed.end()) {
        v.add("unknown-feature", join_path(path, e.name),
              "not a field of a '" + t + "' complex sentence");
      }
    }
  };
  if (t == "simple") {
    cs.type = ComplexSentence::Type::simple;
    expect_only({"type", "arg"});
    if (const Value* arg = raw.find("arg"); arg && arg->is_fs()) {
      cs.arg = make_frame(v.canonical_frame(arg->fs(), join_path(path, "arg")));
    } else {
      v.add("bad-enum-value", path, "simple sentence needs an arg case-frame");
    }
  } else if (t == "conj") {
    cs.type = ComplexSentence::Type::conj;
    expect_only({"type", "conj", "elements"});
    if (const Value* c = raw.find("conj"); c && c->is_atom()) cs.conj = c->atom().name;
    else v.add("bad-enum-value", join_path(path, "conj"), "conj lexeme is required");
    const Value* elements = raw.find("elements");
    if (!elements || !elements->is_list() || elements->list().size() < 2) {
      v.add("bad-enum-value", join_path(path, "elements"),
            "conj needs a list of two or more sentences");
    } else {
      int i = 0;
      for (const auto& item : elements->list()) {
        std::string p = join_path(path, "elements[" + std::to_string(i++) + "]");
        if (item.is_fs()) cs.elements.push_back(build_complex(v, item.fs(), p));
        else v.add("bad-enum-value", p, "element must be a structure");
      }
    }
  } else if (t == "linked") {
    cs.type = ComplexSentence::Type::linked;
    expect_only({"type", "link-relation", "arg1", "arg2"});
    if (const Value* rel = raw.find("link-relation"); rel && rel->is_atom()) {
      cs.link_relation = rel->atom().name;
    } else {
      v.add("bad-enum-value", join_path(path, "link-relation"), "link-relation is required");
    }
    for (std::string_view arg : {"arg1", "arg2"}) {
      const Value* a = raw.find(arg);
      std::string p = join_path(path, arg);
      if (a && a->is_fs()) cs.linked_args.push_back(build_complex(v, a->fs(), p));
      else v.add("bad-enum-value", p, "linked sentence argument is required");
    }
  } else {
    v.add("bad-enum-value", join_path(path, "type"), "type must be simple, conj or linked");
  }
  return cs;
}

}  // namespace

ComplexSentence validate(const FeatureStructure& raw) {
  Validator v;
  ComplexSentence cs = build_complex(v, raw, "");
  if (!v.violations.empty()) throw SchemaError(std::move(v.violations));
  return cs;
}

FeatureStructure validate_noun_phrase(const FeatureStructure& raw) {
  Validator v;
  FeatureStructure np = v.canonical_np(raw, "");
  if (!v.violations.empty()) throw SchemaError(std::move(v.violations));
  return np;
}

}  // namespace serbest
