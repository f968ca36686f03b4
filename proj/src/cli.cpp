#include "laverkit/cli.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "laverkit/error.hpp"
#include "laverkit/feval.hpp"
#include "laverkit/hierarchy.hpp"
#include "laverkit/laver.hpp"
#include "laverkit/ordinal.hpp"
#include "laverkit/pattern.hpp"
#include "laverkit/render.hpp"
#include "laverkit/verify.hpp"

namespace laverkit {

namespace {

// Invocation problems discovered after flag parsing (bad config file, ...):
// reported like usage errors, exit code 2.
struct UsageFailure {
  std::string message;
};

BigNat parse_bignat(const std::string& text) {
  if (text.empty()) fail("ParseError", "expected a natural number");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail("ParseError", "expected a natural number, got '" + text + "'");
  return BigNat(text);
}

std::uint64_t parse_u64(const std::string& text) {
  BigNat n = parse_bignat(text);
  if (n > std::numeric_limits<std::uint64_t>::max())
    fail("OutOfRange", "number too large: " + text);
  return n.convert_to<std::uint64_t>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("ParseError", "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct PatternInput {
  std::string name;
  std::string figure;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option_group("pattern input");
    g->add_option("--name", name, "built-in pattern name");
    g->add_option("--figure", figure, "figure string: row entries, then the negated step");
    g->add_option("--file", file, "file holding a figure string or the JSON form");
    g->require_option(1);
  }

  Blp load() const {
    if (!name.empty()) return named_pattern(name);
    if (!figure.empty()) return parse_figure(figure);
    std::string text = read_file(file);
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i < text.size() && text[i] == '{') return from_json_string(text);
    return parse_figure(text);
  }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Blp apply_op_token(Blp p, const std::string& token, detail::StepMeter* meter) {
  std::vector<std::string> parts = split(token, ':');
  const std::string& op = parts[0];
  if (op == "del" && parts.size() == 1) return del(p);
  if (op == "copied" && parts.size() == 1) return copied(p, meter);
  if (op == "M" && parts.size() == 1) return m_op(p, {}, meter);
  if (op == "E" && parts.size() == 2)
    return detail::e_op_big(p, parse_bignat(parts[1]), meter);
  if (op == "fullcomp" && parts.size() == 2)
    return fullcomp(p, parse_u64(parts[1]));
  if (op == "comp" && parts.size() == 3) {
    std::vector<std::uint64_t> T;
    for (const std::string& v : split(parts[2], '|')) T.push_back(parse_u64(v));
    return comp(p, parse_u64(parts[1]), T);
  }
  fail("ParseError",
       "bad op '" + token +
           "' (expected del, copied, M, E:<m>, fullcomp:<i>, comp:<i>:<t|t|...>)");
}

std::string pattern_output(const Blp& p, const std::string& form) {
  if (form == "json") return to_json_string(p);
  if (form == "figure") return format_figure(p);
  fail("ParseError", "output form must be figure or json");
}

struct Driver {
  bool json = false;
  std::string config_path;
  std::uint64_t max_bits = EvalBudget{}.max_bits;
  std::uint64_t max_steps = EvalBudget{}.max_steps;
  CLI::Option* bits_opt = nullptr;
  CLI::Option* steps_opt = nullptr;

  // Deferred command body; runs after the budget is assembled.
  std::function<std::string()> action;
  std::optional<int> exit_override;

  EvalBudget budget;

  void finalize_budget() {
    EvalBudget b;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageFailure{"cannot read config file: " + config_path};
      std::string line;
      int lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        std::string_view v(line);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
          v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
          v.remove_suffix(1);
        if (v.empty() || v.front() == '#') continue;
        std::size_t eq = v.find('=');
        if (eq == std::string_view::npos)
          throw UsageFailure{"config line " + std::to_string(lineno) +
                             ": expected key=value"};
        std::string key(v.substr(0, eq)), val(v.substr(eq + 1));
        std::uint64_t num = 0;
        try {
          num = parse_u64(val);
        } catch (const Error&) {
          throw UsageFailure{"config line " + std::to_string(lineno) +
                             ": bad value '" + val + "'"};
        }
        if (key == "max_bits" || key == "max-bits")
          b.max_bits = num;
        else if (key == "max_steps" || key == "max-steps")
          b.max_steps = num;
        else
          throw UsageFailure{"config line " + std::to_string(lineno) +
                             ": unknown key '" + key + "'"};
      }
    }
    if (bits_opt && bits_opt->count() > 0) b.max_bits = max_bits;
    if (steps_opt && steps_opt->count() > 0) b.max_steps = max_steps;
    budget = b;
  }
};

HierarchyIndex parse_hierarchy_index(const std::string& text) {
  if (text == "eps0") return Eps0Token{};
  return ord_parse(text);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Driver d;
  CLI::App app{"staircase-pattern calculus toolkit"};
  app.require_subcommand(1);
  app.add_flag("--json", d.json, "wrap results as single-line JSON");
  d.bits_opt = app.add_option("--max-bits", d.max_bits,
                              "bit ceiling for computed values");
  d.steps_opt = app.add_option("--max-steps", d.max_steps,
                               "step ceiling for evaluations");
  app.add_option("--config", d.config_path,
                 "key=value file with max_bits / max_steps defaults");

  // ---- blp ----------------------------------------------------------------
  auto* blp_cmd = app.add_subcommand("blp", "staircase pattern operations");
  blp_cmd->require_subcommand(1);

  PatternInput in_validate, in_classify, in_apply, in_render;
  std::string apply_ops_text, apply_out = "figure", canonical_out = "figure";
  std::string canonical_alpha;
  std::uint64_t canonical_qn = 0, render_cell = 2;
  bool render_svg_flag = false, render_highlight = false;

  auto* c_validate = blp_cmd->add_subcommand("validate", "check the invariants");
  in_validate.attach(c_validate);
  c_validate->callback([&] {
    d.action = [&]() -> std::string {
      in_validate.load();
      return "ok";
    };
  });

  auto* c_classify = blp_cmd->add_subcommand("classify", "name the pattern's kind");
  in_classify.attach(c_classify);
  c_classify->callback([&] {
    d.action = [&]() -> std::string {
      return to_string(classify(in_classify.load()));
    };
  });

  auto* c_apply = blp_cmd->add_subcommand("apply", "apply a rewrite chain");
  in_apply.attach(c_apply);
  c_apply->add_option("--ops", apply_ops_text,
                      "comma list: del, copied, M, E:<m>, fullcomp:<i>, "
                      "comp:<i>:<t|t|...>")
      ->required();
  c_apply->add_option("--out", apply_out, "figure (default) or json");
  c_apply->callback([&] {
    d.action = [&]() -> std::string {
      detail::StepMeter meter(d.budget);
      Blp p = in_apply.load();
      try {
        for (const std::string& tok : split(apply_ops_text, ','))
          p = apply_op_token(std::move(p), tok, &meter);
      } catch (const detail::BudgetExhausted&) {
        fail("OutOfRange", "rewrite chain exceeds the step budget");
      }
      return pattern_output(p, apply_out);
    };
  });

  auto* c_canonical =
      blp_cmd->add_subcommand("canonical", "build a canonical or tabular pattern");
  auto* cg = c_canonical->add_option_group("source");
  cg->add_option("--alpha", canonical_alpha, "ordinal expression");
  cg->add_option("--qn", canonical_qn, "tabular family index");
  cg->require_option(1);
  c_canonical->add_option("--out", canonical_out, "figure (default) or json");
  c_canonical->callback([&] {
    bool use_qn = cg->get_option("--qn")->count() > 0;
    d.action = [&, use_qn]() -> std::string {
      Blp p = use_qn ? qn(canonical_qn) : palpha(ord_parse(canonical_alpha));
      return pattern_output(p, canonical_out);
    };
  });

  auto* c_render = blp_cmd->add_subcommand("render", "draw the staircase");
  in_render.attach(c_render);
  c_render->add_flag("--svg", render_svg_flag, "emit SVG instead of text");
  c_render->add_option("--cell-width", render_cell, "text columns per unit");
  c_render->add_flag("--highlight", render_highlight, "mark the copy range");
  c_render->callback([&] {
    d.action = [&]() -> std::string {
      RenderOptions opts;
      opts.cell_width = render_cell;
      opts.highlight = render_highlight;
      Blp p = in_render.load();
      return render_svg_flag ? render_svg(p, opts) : render_ascii(p, opts);
    };
  });

  // ---- ord ----------------------------------------------------------------
  auto* ord_cmd = app.add_subcommand("ord", "ordinal notation operations");
  ord_cmd->require_subcommand(1);
  std::string ord_alpha, ord_n = "1", ord_seq, ord_a, ord_b;

  auto* c_ps = ord_cmd->add_subcommand("ps", "attached sequence of an ordinal");
  c_ps->add_option("--alpha", ord_alpha)->required();
  c_ps->callback([&] {
    d.action = [&] { return pattern_seq_format(ps(ord_parse(ord_alpha))); };
  });

  auto* c_fs = ord_cmd->add_subcommand("fs", "fundamental-sequence step");
  c_fs->add_option("--alpha", ord_alpha, "ordinal expression, or eps0")->required();
  c_fs->add_option("-n,--n", ord_n, "argument");
  c_fs->callback([&] {
    d.action = [&]() -> std::string {
      if (ord_alpha == "eps0") {
        std::uint64_t k = parse_u64(ord_n);
        if (k > 100'000) fail("OutOfRange", "tower height too large");
        return ord_format(eps0_fs(k));
      }
      return ord_format(fs(ord_parse(ord_alpha), parse_bignat(ord_n)));
    };
  });

  auto* c_decode = ord_cmd->add_subcommand("decode", "ordinal of an attached sequence");
  c_decode->add_option("--seq", ord_seq, "comma-separated naturals (empty for 0)");
  c_decode->callback([&] {
    d.action = [&] { return ord_format(decode_ps(pattern_seq_parse(ord_seq))); };
  });

  auto* c_cmp = ord_cmd->add_subcommand("cmp", "compare two ordinals");
  c_cmp->add_option("--a", ord_a)->required();
  c_cmp->add_option("--b", ord_b)->required();
  c_cmp->callback([&] {
    d.action = [&]() -> std::string {
      int c = ord_cmp(ord_parse(ord_a), ord_parse(ord_b));
      return c < 0 ? "less" : c > 0 ? "greater" : "equal";
    };
  });

  // ---- hier ---------------------------------------------------------------
  auto* hier_cmd = app.add_subcommand("hier", "ordinal-indexed hierarchies");
  hier_cmd->require_subcommand(1);
  std::string hier_alpha, hier_n = "1";

  auto* c_hardy = hier_cmd->add_subcommand("hardy", "Hardy hierarchy value");
  c_hardy->add_option("--alpha", hier_alpha, "ordinal expression, or eps0")->required();
  c_hardy->add_option("-n,--n", hier_n, "argument");
  c_hardy->callback([&] {
    d.action = [&] {
      return hardy(parse_hierarchy_index(hier_alpha), parse_bignat(hier_n),
                   d.budget)
          .to_string();
    };
  });

  auto* c_mh = hier_cmd->add_subcommand("m", "m hierarchy value");
  c_mh->add_option("--alpha", hier_alpha)->required();
  c_mh->add_option("-n,--n", hier_n, "argument (>= 2)");
  c_mh->callback([&] {
    d.action = [&] {
      return mh(ord_parse(hier_alpha), parse_bignat(hier_n), d.budget).to_string();
    };
  });

  // ---- f ------------------------------------------------------------------
  auto* f_cmd = app.add_subcommand("f", "growth estimator");
  f_cmd->require_subcommand(1);
  PatternInput in_feval, in_ftrace, in_frank;
  std::string f_m = "1";
  std::uint64_t trace_limit = 64;

  auto* c_feval = f_cmd->add_subcommand("eval", "estimator value");
  in_feval.attach(c_feval);
  c_feval->add_option("-m,--m", f_m, "argument");
  c_feval->callback([&] {
    d.action = [&] {
      return f_eval(in_feval.load(), parse_bignat(f_m), d.budget).to_string();
    };
  });

  auto* c_ftrace = f_cmd->add_subcommand("trace", "fired-case reduction trace");
  in_ftrace.attach(c_ftrace);
  c_ftrace->add_option("-m,--m", f_m, "argument");
  c_ftrace->add_option("--limit", trace_limit, "maximum trace entries");
  c_ftrace->callback([&] {
    d.action = [&] {
      return format_trace(f_trace(in_ftrace.load(), parse_bignat(f_m), trace_limit));
    };
  });

  auto* c_frank = f_cmd->add_subcommand("rank", "ordinal of a canonical pattern");
  in_frank.attach(c_frank);
  c_frank->callback([&] {
    d.action = [&]() -> std::string {
      auto r = rank_canonical(in_frank.load());
      return r ? ord_format(*r) : "Unrecognized";
    };
  });

  // ---- laver ---------------------------------------------------------------
  auto* laver_cmd = app.add_subcommand("laver", "finite self-distributive tables");
  laver_cmd->require_subcommand(1);
  unsigned lv_n = 0;
  std::uint64_t lv_a = 1, lv_b = 1;

  auto* c_star = laver_cmd->add_subcommand("star", "one table entry");
  c_star->add_option("-n,--n", lv_n, "table order exponent")->required();
  c_star->add_option("-a,--a", lv_a)->required();
  c_star->add_option("-b,--b", lv_b)->required();
  c_star->callback([&] {
    d.action = [&] { return std::to_string(star(lv_n, lv_a, lv_b)); };
  });

  auto* c_table = laver_cmd->add_subcommand("table", "dump the whole table");
  c_table->add_option("-n,--n", lv_n)->required();
  c_table->callback([&] {
    d.action = [&]() -> std::string {
      std::ostringstream os;
      for (const auto& row : full_table(lv_n)) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (j) os << ' ';
          os << row[j];
        }
        os << '\n';
      }
      return os.str();
    };
  });

  auto* c_period = laver_cmd->add_subcommand("period", "row period");
  c_period->add_option("-n,--n", lv_n)->required();
  c_period->add_option("-a,--a", lv_a)->required();
  c_period->callback([&] {
    d.action = [&] { return std::to_string(period(lv_n, lv_a)); };
  });

  auto* c_compose = laver_cmd->add_subcommand("compose", "row composing two rows");
  c_compose->add_option("-n,--n", lv_n)->required();
  c_compose->add_option("-a,--a", lv_a)->required();
  c_compose->add_option("-b,--b", lv_b)->required();
  c_compose->callback([&] {
    d.action = [&] { return std::to_string(compose_index(lv_n, lv_a, lv_b)); };
  });

  auto* c_f1 = laver_cmd->add_subcommand("f1", "table-escalation functional");
  c_f1->add_option("-n,--n", lv_b)->required();
  c_f1->callback([&] {
    d.action = [&] { return f1(lv_b, d.budget).to_string(); };
  });

  // ---- verify ---------------------------------------------------------------
  auto* c_verify = app.add_subcommand("verify", "run the end-to-end check suite");
  c_verify->callback([&] {
    d.action = [&]() -> std::string {
      std::ostringstream os;
      int failures = report_verify(os);
      d.exit_override = failures == 0 ? 0 : 1;
      return os.str();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    d.finalize_budget();
    std::string value = d.action();
    if (d.json) {
      out << nlohmann::json{{"ok", true}, {"value", value}}.dump() << '\n';
    } else {
      out << value;
      if (value.empty() || value.back() != '\n') out << '\n';
    }
    return d.exit_override.value_or(0);
  } catch (const UsageFailure& u) {
    err << u.message << '\n';
    return 2;
  } catch (const Error& e) {
    if (d.json)
      out << nlohmann::json{{"ok", false}, {"error", e.what()}}.dump() << '\n';
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace laverkit
