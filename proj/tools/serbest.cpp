// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

// serbest — command-line surface for the sentence generation engine.
//
//   serbest realize [--grammar DIR] [--lexicon FILE] [--trace] INPUT...
//   serbest morph "kitap+P1SG+NOM"
//   serbest np [--case acc] [--role dir-obj] INPUT
//   serbest variants INPUT
//   serbest trace INPUT
//   serbest corpus DIR
//
// Exit codes: 0 success, 1 validation error, 2 realization error.
// SERBEST_GRAMMAR_DIR overrides the default grammar directory.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "serbest/engine.hpp"
#include "serbest/error.hpp"
#include "serbest/morph.hpp"

namespace fs = std::filesystem;
using namespace serbest;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRealization = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_validation_code(const std::string& code) {
  return code == "schema-error" || code == "syntax-error" || code == "duplicate-feature" ||
         code == "io-error" || code == "bad-path" || code == "duplicate-entry" ||
         code == "bad-register" || code == "undefined-nonterminal";
}

int exit_code_for(const Error& e) {
  return is_validation_code(e.code()) ? kExitValidation : kExitRealization;
}

std::string resolve_grammar_dir(const std::string& flag_value, const char* argv0) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SERBEST_GRAMMAR_DIR"); env && *env) return env;
  // installed layout: <prefix>/bin/serbest + <prefix>/share/serbest
  std::error_code ec;
  fs::path exe = fs::canonical(fs::path(argv0), ec);
  if (!ec) {
    fs::path share = exe.parent_path().parent_path() / "share" / "serbest";
    if (fs::exists(share / "sentence.rules", ec)) return share.string();
  }
#ifdef SERBEST_SOURCE_GRAMMAR_DIR
  return SERBEST_SOURCE_GRAMMAR_DIR;  // build-tree fallback
#else
  return "data";
#endif
}

Engine load_engine(const std::string& grammar_dir, const std::string& lexicon_path) {
  if (!lexicon_path.empty()) return Engine::load(grammar_dir, lexicon_path);
  return Engine::load(grammar_dir);
}

int run_realize(const Engine& engine, const std::vector<std::string>& inputs, bool with_trace) {
  for (const auto& input : inputs) {
    auto structures = parse_fs_stream(slurp(input));
    for (const auto& raw : structures) {
      ComplexSentence cs = validate(raw);
      if (with_trace && cs.type == ComplexSentence::Type::simple) {
        SentenceRealization r = engine.order().realize_sentence(*cs.arg);
        for (const auto& step : r.trace) {
          std::cerr << step.state << '\t' << step.emission << '\t' << step.remaining << '\n';
        }
      }
      TextRealization out = engine.order().realize_complex(cs);
      for (const auto& warning : out.warnings) std::cerr << "warning: " << warning << '\n';
      std::cout << out.text << '\n';
    }
  }
  return kExitOk;
}

int run_trace(const Engine& engine, const std::string& input) {
  auto structures = parse_fs_stream(slurp(input));
  for (const auto& raw : structures) {
    ComplexSentence cs = validate(raw);
    if (cs.type != ComplexSentence::Type::simple) {
      throw Error("unsupported-s-form", "trace needs a simple sentence frame");
    }
    SentenceRealization r = engine.order().realize_sentence(*cs.arg);
    for (const auto& step : r.trace) {
      std::cout << step.state << '\t' << step.emission << '\t' << step.remaining << '\n';
    }
  }
  return kExitOk;
}

int run_np(const Engine& engine, const std::string& input, const std::string& case_token,
           const std::string& role_token) {
  auto structures = parse_fs_stream(slurp(input));
  for (const auto& raw : structures) {
    FeatureStructure np = validate_noun_phrase(raw);
    Case kase = Case::nom;
    if (!case_token.empty()) {
      auto k = parse_case(case_token);
      if (!k) throw Error("bad-enum-value", "unknown case '" + case_token + "'");
      kase = *k;
    } else if (!role_token.empty()) {
      auto r = parse_role(role_token);
      if (!r) throw Error("unknown-role", "unknown role '" + role_token + "'");
      kase = case_for_role(*r, Value(np));
    }
    NpRealization out = engine.np().realize(np, kase);
    std::string line;
    for (const auto& t : out.tokens) {
      if (!line.empty()) line += ' ';
      line += t;
    }
    std::cout << line << '\n';
  }
  return kExitOk;
}

std::string control_spec(const std::optional<Role>& t, const std::optional<Role>& f,
                         const std::optional<Role>& b) {
  auto name = [](const std::optional<Role>& r) {
    return r ? std::string(role_name(*r)) : std::string("-");
  };
  return "topic=" + name(t) + " focus=" + name(f) + " backgr=" + name(b);
}

int run_variants(const Engine& engine, const std::string& input) {
  auto structures = parse_fs_stream(slurp(input));
  for (const auto& raw : structures) {
    ComplexSentence cs = validate(raw);
    if (cs.type != ComplexSentence::Type::simple) {
      throw Error("unsupported-s-form", "variants needs a simple sentence frame");
    }
    const CaseFrame& base = *cs.arg;
    std::vector<Role> roles = base.present_roles();
    std::vector<std::optional<Role>> options = {std::nullopt};
    for (Role r : roles) options.push_back(r);

    std::map<std::string, std::string> seen;  // surface -> control spec (first wins)
    std::vector<std::pair<std::string, std::string>> lines;
    for (const auto& topic : options) {
      for (const auto& focus : options) {
        if (topic && focus && *topic == *focus) continue;
        for (const auto& backgr : options) {
          if (backgr && ((topic && *topic == *backgr) || (focus && *focus == *backgr))) continue;
          FeatureStructure fs = remove_at(base.fs(), Path{"control"});
          FeatureStructure control;
          if (topic) control.set("topic", Value(Atom{std::string(role_name(*topic))}));
          if (focus) control.set("focus", Value(Atom{std::string(role_name(*focus))}));
          if (backgr) control.set("backgr", Value(Atom{std::string(role_name(*backgr))}));
          if (!control.empty()) fs.set("control", Value(std::move(control)));
          try {
            CaseFrame variant = CaseFrame::from_fs(fs);
            SentenceRealization r = engine.order().realize_sentence(variant);
            std::string text;
            for (const auto& tok : r.tokens) {
              if (!text.empty()) text += ' ';
              text += tok;
            }
            if (seen.emplace(text, control_spec(topic, focus, backgr)).second) {
              lines.emplace_back(control_spec(topic, focus, backgr), text);
            }
          } catch (const Error& e) {
            if (e.code() == "focus-conflict" || e.code() == "control-overlap") continue;
            throw;
          }
        }
      }
    }
    for (const auto& [spec, text] : lines) std::cout << spec << '\t' << text << '\n';
  }
  return kExitOk;
}

int run_corpus(const Engine& engine, const std::string& dir) {
  std::vector<fs::path> cases;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".fs") cases.push_back(entry.path());
  }
  if (ec) throw Error("io-error", "cannot read corpus directory " + dir);
  std::sort(cases.begin(), cases.end());

  int failures = 0;
  for (const auto& input : cases) {
    std::string id = input.stem().string();
    fs::path gold_path = input;
    gold_path.replace_extension(".gold");
    fs::path trace_path = input;
    trace_path.replace_extension(".trace");

    std::string got, trace_got;
    std::string status = "pass";
    std::string detail;
    try {
      auto structures = parse_fs_stream(slurp(input.string()));
      for (const auto& raw : structures) {
        ComplexSentence cs = validate(raw);
        got += engine.order().realize_complex(cs).text + "\n";
        if (fs::exists(trace_path) && cs.type == ComplexSentence::Type::simple) {
          SentenceRealization r = engine.order().realize_sentence(*cs.arg);
          std::string emissions;
          for (const auto& step : r.trace) {
            if (step.emission == "NIL") continue;
            if (!emissions.empty()) emissions += ' ';
            emissions += step.emission;
          }
          trace_got += emissions + "\n";
        }
      }
      std::string gold = slurp(gold_path.string());
      if (got != gold) {
        status = "FAIL";
        detail = "expected: " + gold + "     got: " + got;
      } else if (fs::exists(trace_path)) {
        std::string trace_gold = slurp(trace_path.string());
        if (trace_got != trace_gold) {
          status = "FAIL";
          detail = "expected trace: " + trace_gold + "     got trace: " + trace_got;
        }
      }
    } catch (const Error& e) {
      status = "FAIL";
      detail = std::string(e.what()) + "\n";
    }
    if (status == "FAIL") ++failures;
    std::cout << status << ' ' << id << '\n';
    if (!detail.empty()) std::cout << "  " << detail;
  }
  std::cout << cases.size() << " cases, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tactical sentence generator for a free constituent order language"};
  app.require_subcommand(1);

  std::string grammar_dir_flag;
  std::string lexicon_flag;
  app.add_option("--grammar", grammar_dir_flag, "grammar directory (sentence.rules, np.rules)");
  app.add_option("--lexicon", lexicon_flag, "lexicon file (defaults to <grammar>/lexicon.tlx)");

  auto* realize_cmd = app.add_subcommand("realize", "realize feature-structure files");
  std::vector<std::string> realize_inputs;
  bool realize_trace = false;
  realize_cmd->add_option("inputs", realize_inputs, "input files")->required();
  realize_cmd->add_flag("--trace", realize_trace, "print the emission trace to stderr");

  auto* morph_cmd = app.add_subcommand("morph", "generate one word from root+TAG+TAG");
  std::string morph_input;
  morph_cmd->add_option("tagstring", morph_input, "e.g. kitap+P1SG+NOM")->required();

  auto* np_cmd = app.add_subcommand("np", "realize a noun phrase file");
  std::string np_input, np_case, np_role;
  np_cmd->add_option("input", np_input, "noun phrase file")->required();
  np_cmd->add_option("--case", np_case, "surface case (nom acc dat loc abl gen ins)");
  np_cmd->add_option("--role", np_role, "derive the case from a grammatical role");

  auto* variants_cmd = app.add_subcommand("variants", "enumerate information-structure variants");
  std::string variants_input;
  variants_cmd->add_option("input", variants_input, "simple frame file")->required();

  auto* trace_cmd = app.add_subcommand("trace", "print the constituent-order trace");
  std::string trace_input;
  trace_cmd->add_option("input", trace_input, "simple frame file")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "run a golden corpus directory");
  std::string corpus_dir;
  corpus_cmd->add_option("dir", corpus_dir, "corpus directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (morph_cmd->parsed()) {
      // morph needs only the lexicon, but the engine bundles the load path
      Engine engine = load_engine(resolve_grammar_dir(grammar_dir_flag, argv[0]), lexicon_flag);
      GeneratedWord word = generate(engine.lexicon(), parse_tag_string(morph_input));
      std::cout << word.surface << '\n';
      return kExitOk;
    }
    Engine engine = load_engine(resolve_grammar_dir(grammar_dir_flag, argv[0]), lexicon_flag);
    if (realize_cmd->parsed()) return run_realize(engine, realize_inputs, realize_trace);
    if (np_cmd->parsed()) return run_np(engine, np_input, np_case, np_role);
    if (variants_cmd->parsed()) return run_variants(engine, variants_input);
    if (trace_cmd->parsed()) return run_trace(engine, trace_input);
    if (corpus_cmd->parsed()) return run_corpus(engine, corpus_dir);
  } catch (const SchemaError& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRealization;
  }
  return kExitOk;
}
