#include "sbt/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sbt/error.hpp"
#include "text_util.hpp"

namespace sbt {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(Errc::io_error, "write to '" + path.string() + "' failed");
}

TdtInstance roundtrip_3dt(const std::filesystem::path &path) {
  const std::string text = read_file(path);
  TdtInstance inst = parse_tdt(text);
  if (format_tdt(inst) != text)
    throw Error(Errc::parse_error, "'" + path.string() + "' is not in canonical form");
  return inst;
}

std::string format_trace(const TdtInstance &start, const StepTrace &trace) {
  std::string out;
  TdtInstance cur = start;
  int index = 0;
  for (const TraceStep &s : trace.steps) {
    const Alphabet &al = cur.alphabet();
    ordered_json rec;
    rec["index"] = ++index;
    rec["triple"] = {al.name(s.triple.a), al.name(s.triple.b), al.name(s.triple.c)};
    rec["i"] = s.move.i();
    rec["j"] = s.move.j();
    rec["k"] = s.move.k();
    cur = apply_step(cur, s.triple);
    rec["word-after"] = cur.word_string();
    out += rec.dump() + "\n";
  }
  return out;
}

std::string format_move_trace(const Permutation &start, const std::vector<Transposition> &moves) {
  std::string out;
  Permutation cur = start;
  int index = 0;
  for (const Transposition &t : moves) {
    cur = apply_transposition(cur, t);
    ordered_json rec;
    rec["index"] = ++index;
    rec["triple"] = nullptr;
    rec["i"] = t.i();
    rec["j"] = t.j();
    rec["k"] = t.k();
    rec["word-after"] = format_permutation(cur);
    out += rec.dump() + "\n";
  }
  return out;
}

std::vector<TraceRecord> parse_trace(std::string_view text) {
  std::vector<TraceRecord> out;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (detail::split_ws(line).empty()) continue;
    try {
      const json rec = json::parse(line);
      TraceRecord r{rec.at("index").get<int>(), std::nullopt,
                    Transposition(rec.at("i").get<int>(), rec.at("j").get<int>(), rec.at("k").get<int>()),
                    rec.value("word-after", std::string())};
      if (const auto &t = rec.at("triple"); !t.is_null()) {
        if (!t.is_array() || t.size() != 3) throw Error(Errc::parse_error, "triple needs three names");
        r.triple = std::array<std::string, 3>{t[0].get<std::string>(), t[1].get<std::string>(),
                                              t[2].get<std::string>()};
      }
      if (r.index != static_cast<int>(out.size()) + 1)
        throw Error(Errc::parse_error, "records out of order");
      out.push_back(std::move(r));
    } catch (const json::exception &e) {
      throw Error(Errc::parse_error, "trace line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error &e) {
      throw Error(Errc::parse_error, "trace line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

StepTrace trace_from_records(const TdtInstance &start, const std::vector<TraceRecord> &records) {
  StepTrace trace{start.canonical_key(), {}};
  TdtInstance cur = start;
  for (const TraceRecord &r : records) {
    const std::string where = "step " + std::to_string(r.index);
    if (!r.triple) throw Error(Errc::incomplete_trace, where + " names no triple");
    const auto t = cur.find_triple((*r.triple)[0], (*r.triple)[1], (*r.triple)[2]);
    if (!t) throw Error(Errc::incomplete_trace, where + ": triple is not live");
    if (!is_well_ordered(cur, *t)) throw Error(Errc::incomplete_trace, where + ": triple is not well-ordered");
    const Transposition tau = step_transposition(cur, *t);
    if (tau != r.move) throw Error(Errc::incomplete_trace, where + ": recorded move differs");
    cur = apply_step(cur, *t);
    if (!r.word_after.empty() && r.word_after != cur.word_string())
      throw Error(Errc::incomplete_trace, where + ": word after the step differs");
    trace.steps.push_back({*t, tau});
  }
  return trace;
}

namespace {

ordered_json blocks_json(const Assembling &a) {
  ordered_json blocks = ordered_json::array();
  const BlockDecomposition &dec = a.decomposition();
  for (std::size_t h = 0; h < a.specs.size(); ++h) {
    const BlockSpec &spec = a.specs[h];
    ordered_json b;
    b["index"] = h + 1;
    b["kind"] = std::string(to_string(spec.kind));
    b["group"] = spec.group;
    b["s"] = dec.start(static_cast<int>(h));
    b["t"] = dec.end(static_cast<int>(h));
    b["inputs"] = spec.inputs;
    b["outputs"] = spec.outputs;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

ordered_json base_metadata(const Assembling &a) {
  ordered_json meta;
  meta["span"] = a.instance().span();
  meta["triples"] = a.instance().triple_count();
  meta["blocks"] = blocks_json(a);
  ordered_json vars = ordered_json::array();
  for (const VariableDecl &v : a.variables)
    vars.push_back({{"id", v.id}, {"source", v.source + 1}, {"target", v.target + 1}});
  meta["variables"] = std::move(vars);
  return meta;
}

} // namespace

std::string assembling_metadata(const Assembling &a) { return base_metadata(a).dump(2) + "\n"; }

std::string reduction_metadata(const ReductionOutput &out) {
  ordered_json meta = base_metadata(out.assembling);
  const FormulaStats st = out.formula.stats();
  meta["formula"] = {{"m", st.m}, {"gamma", st.gamma}, {"dimacs", format_dimacs(out.formula)}};
  ordered_json lits = ordered_json::array();
  for (const LiteralSlot &s : out.literal_map)
    lits.push_back({{"clause", s.clause}, {"position", s.position}, {"variable", s.variable}});
  meta["literal_map"] = std::move(lits);
  meta["last_conjunct"] = out.last_conjunct;
  return meta.dump(2) + "\n";
}

Assembling assembling_from_metadata(std::string_view text) {
  std::vector<BlockSpec> specs;
  int span = 0;
  try {
    const json meta = json::parse(text);
    span = meta.at("span").get<int>();
    for (const json &b : meta.at("blocks"))
      specs.push_back({parse_block_kind(b.at("kind").get<std::string>()),
                       b.at("inputs").get<std::vector<std::string>>(),
                       b.at("outputs").get<std::vector<std::string>>(), b.value("group", std::string())});
  } catch (const json::exception &e) {
    throw Error(Errc::parse_error, std::string("metadata: ") + e.what());
  }
  Assembling a = assemble(std::move(specs));
  if (a.instance().span() != span)
    throw Error(Errc::parse_error, "metadata span " + std::to_string(span) +
                                       " does not match its blocks (" +
                                       std::to_string(a.instance().span()) + ")");
  return a;
}

std::string layout_report(const Assembling &a, const Layout &layout) {
  ordered_json rep;
  ordered_json blocks = ordered_json::array();
  for (std::size_t h = 0; h < layout.p.size(); ++h)
    blocks.push_back({{"index", h + 1},
                      {"kind", std::string(to_string(a.specs[h].kind))},
                      {"p", layout.p[h]},
                      {"q", layout.q[h]}});
  rep["blocks"] = std::move(blocks);
  ordered_json vars = ordered_json::array();
  for (const VariableDecl &v : a.variables)
    vars.push_back({{"id", v.id}, {"alpha", layout.alpha_of(v.id)}, {"beta", layout.beta_of(v.id)}});
  rep["variables"] = std::move(vars);
  return rep.dump(2) + "\n";
}

} // namespace sbt
