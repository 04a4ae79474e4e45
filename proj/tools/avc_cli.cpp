// Copyright 2026 The avc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// avc command-line front end.
//
// Exit status: 0 success, 1 check or golden failure, 2 undecodable,
// 3 configuration or usage error, 4 I/O or input parse error.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "avc/avc.hpp"
#include "avc/golden.hpp"

namespace {

using namespace avc;

enum Exit { kOk = 0, kFailed = 1, kUndecodable = 2, kConfig = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_sink(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << body;
  if (!out) throw IoError("write to '" + path + "' failed");
}

// Preset name or configuration file.
CodeSpec load_code(const std::string& what) {
  if (auto c = presets::by_name(what)) return *c;
  if (!std::filesystem::exists(what)) throw ConfigError("'" + what + "' is neither a preset nor a file");
  return config::code(read_source(what), std::filesystem::path(what).stem().string());
}

FieldPtr load_field(const std::string& what) {
  FieldSpec spec;
  if (fields::by_name(what, &spec)) return config::build_field(spec);
  if (!std::filesystem::exists(what)) throw ConfigError("'" + what + "' is neither a field preset nor a file");
  return config::build_field(config::field_spec(config::parse_key_values(read_source(what))));
}

MonomialOrder make_order(const std::string& kind, const std::vector<int>& weights, int dims) {
  config::KeyValues kv{{"order", kind}};
  if (!weights.empty()) {
    std::string w;
    for (int x : weights) w += std::to_string(x) + " ";
    kv["weights"] = w;
  }
  return config::order(kv, dims);
}

std::string code_summary(const CodeSpec& c) {
  std::ostringstream os;
  os << "code " << (c.name().empty() ? "-" : c.name()) << ": q=" << c.field().q() << " N=" << c.dims()
     << " n=" << c.n() << " k=" << c.k() << " |B|=" << c.check().size() << " d_fr=" << c.d_fr()
     << " order=" << c.order().name() << "\n";
  return os.str();
}

struct Common {
  std::string input = "-";
  std::string output;
};

struct FieldOpts {
  std::string field = "gf8";
  int dims = 1;
};

void add_io(CLI::App* sub, Common& io) {
  sub->add_option("-i,--input", io.input, "input file, '-' for stdin");
  sub->add_option("-o,--output", io.output, "output file, stdout by default");
}

int field_table(const FieldOpts& fo, const Common& io) {
  FieldPtr f = load_field(fo.field);
  std::ostringstream os;
  const auto& spec = f->spec();
  os << "# GF(" << f->q() << "), p=" << spec.p << " m=" << spec.m << "\n";
  os << "# exp  poly  zech\n";
  for (Elem e : f->elements()) {
    int v = f->to_poly(e);
    std::string digits;
    for (int i = 0; i < spec.m; ++i) {
      digits = std::to_string(v % spec.p) + digits;
      v /= spec.p;
    }
    os << text::elem(e) << " " << digits;
    if (!e.is_zero()) os << " " << f->zech(e.log);
    os << "\n";
  }
  write_sink(io.output, os.str());
  return kOk;
}

int transform_cmd(bool inverse, const FieldOpts& fo, const Common& io, bool direct, bool grid) {
  FieldPtr f = load_field(fo.field);
  if (fo.dims < 1 || fo.dims > 8) throw ConfigError("--dims must lie in 1..8");
  TransformPath path = direct ? TransformPath::kDirect : TransformPath::kFast;
  std::string src = read_source(io.input);
  std::string out;
  if (inverse) {
    Spectrum h = text::parse_spectrum(*f, IndexSpace(f->q(), fo.dims), src);
    if (h.domain().size() != h.space().size()) throw ParseError("inverse transform needs a spectrum on all of A");
    GridWord c = idft(*f, h, path);
    out = grid ? text::grid_word(*f, c) : text::grid_entries(*f, c);
  } else {
    GridWord c = text::parse_grid_word(*f, fo.dims, src);
    Spectrum h = dft(*f, c, path);
    out = grid ? text::spectrum_grid(h) : text::spectrum_entries(h);
  }
  write_sink(io.output, out);
  return kOk;
}

int gb_cmd(const FieldOpts& fo, const std::string& order, const std::vector<int>& weights, const std::string& pts,
           const Common& io, bool rows) {
  FieldPtr f = load_field(fo.field);
  PointSet psi = text::parse_points(f, fo.dims, read_source(pts));
  GroebnerBasis gb = vanishing_gb(psi, make_order(order, weights, fo.dims));
  if (rows) gb = row_basis(*f, gb);
  write_sink(io.output, text::basis(gb) + "# footprint: " + text::index_set(gb.delta));
  return kOk;
}

int extend_cmd(const std::string& cfg, const Common& io) {
  CodeSpec code = load_code(cfg);
  Spectrum h = text::parse_spectrum(code.field(), code.space(), read_source(io.input));
  if (!(h.domain() == code.delta())) throw ParseError("spectrum must be given exactly on the footprint D");
  Spectrum full = extend(code.field(), h, code.gb(), IndexSet::all(code.space()));
  write_sink(io.output, text::spectrum_entries(full));
  return kOk;
}

int encode_cmd(const std::string& cfg, const Common& io) {
  CodeSpec code = load_code(cfg);
  Spectrum h = text::parse_spectrum(code.field(), code.space(), read_source(io.input));
  write_sink(io.output, text::word_entries(encode_nonsystematic(code, h), code.points()));
  return kOk;
}

int encode_sys_cmd(const std::string& cfg, const std::string& phi_path, const Common& io) {
  CodeSpec code = load_code(cfg);
  PointSet phi = text::parse_points(code.field_ptr(), code.dims(), read_source(phi_path));
  Vec info = text::parse_symbols(code.field(), code.n() - phi.size(), read_source(io.input));
  write_sink(io.output, text::word_entries(systematic_encode(code, info, phi), code.points()));
  return kOk;
}

PointSet erasure_set(const CodeSpec& code, const text::ReceivedWord& r, const std::string& path) {
  PointSet phi1(code.field_ptr(), code.dims());
  for (auto k : r.erased) phi1.add(code.points()[k]);
  if (!path.empty()) {
    PointSet extra = text::parse_points(code.field_ptr(), code.dims(), read_source(path));
    phi1 = phi1.unite(extra.minus(phi1));
  }
  return phi1.sorted();
}

int decode_cmd(const std::string& cfg, const std::string& erasures, const Common& io, bool word, bool direct,
               bool report) {
  CodeSpec code = load_code(cfg);
  text::ReceivedWord r = text::parse_received(code.field(), code.points(), read_source(io.input));
  PointSet phi1 = erasure_set(code, r, erasures);
  std::ostringstream os;
  if (word) {
    DecodeOptions opt;
    opt.path = direct ? TransformPath::kDirect : TransformPath::kFast;
    DecodeResult res = decode_word(code, r.symbols, phi1, opt);
    os << "# codeword\n" << text::word_entries(res.codeword, code.points());
    std::size_t weight = 0;
    for (Elem e : res.error) weight += !e.is_zero();
    os << "# error weight " << weight << "\n";
    for (std::size_t k = 0; k < code.n(); ++k)
      if (!res.error[k].is_zero()) os << "# " << point_str(code.points()[k]) << " -> " << text::elem(res.error[k]) << "\n";
    if (report) os << op_counter_report(res.ops);
  } else {
    StepCounts counts;
    Spectrum h = decode_info(code, r.symbols, phi1, {}, &counts);
    os << text::spectrum_entries(h);
    if (report) os << op_counter_report(counts);
  }
  write_sink(io.output, os.str());
  return kOk;
}

int check_cmd(const std::string& cfg, const Common& io) {
  CodeSpec code = load_code(cfg);
  Vec c = text::parse_word(code.field(), code.points(), read_source(io.input));
  Spectrum s = syndrome(code, c);
  bool ok = is_dual_codeword(code, c);
  std::string out = ok ? "codeword\n" : "not a codeword; syndrome on B:\n" + text::spectrum_entries(s);
  write_sink(io.output, out);
  return ok ? kOk : kFailed;
}

int examples_cmd(const Common& io) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& r : golden::run_all()) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass) os << "  [" << r.detail << "]";
    os << "\n";
    failed += !r.pass;
  }
  os << (failed ? std::to_string(failed) + " golden vector(s) failed\n" : "all golden vectors pass\n");
  write_sink(io.output, os.str());
  return failed ? kFailed : kOk;
}

struct BenchOpts {
  std::string config = "hermitian";
  std::uint64_t seed = 1;
  int trials = 100;
  int erasures = 0;
  int errors = -1;
  bool direct = false;
};

int bench_cmd(const BenchOpts& b, const Common& io) {
  CodeSpec code = load_code(b.config);
  const Field& f = code.field();
  int errors = b.errors;
  if (errors < 0) errors = std::max(0, (code.d_fr() - 1 - b.erasures) / 2);
  if (b.erasures < 0 || b.erasures + errors > static_cast<int>(code.n())) throw ConfigError("too many corrupted positions");
  if (b.trials < 1) throw ConfigError("--trials must be positive");
  std::mt19937_64 rng(b.seed);
  auto rand_elem = [&](bool nonzero) {
    std::uniform_int_distribution<int> d(nonzero ? 0 : -1, static_cast<int>(f.q()) - 2);
    return Elem{d(rng)};
  };
  StepCounts sum;
  int ok = 0, undecodable = 0;
  for (int t = 0; t < b.trials; ++t) {
    Spectrum h(code.info_set());
    for (auto id : code.info_set().ids()) h.set(id, rand_elem(false));
    Vec c = encode_nonsystematic(code, h);
    std::vector<std::size_t> pos(code.n());
    for (std::size_t k = 0; k < pos.size(); ++k) pos[k] = k;
    std::shuffle(pos.begin(), pos.end(), rng);
    Vec r = c;
    PointSet phi1(code.field_ptr(), code.dims());
    for (int i = 0; i < b.erasures + errors; ++i) {
      r[pos[i]] = f.add(r[pos[i]], rand_elem(true));
      if (i < b.erasures) phi1.add(code.points()[pos[i]]);
    }
    try {
      DecodeOptions opt;
      opt.path = b.direct ? TransformPath::kDirect : TransformPath::kFast;
      DecodeResult res = decode_word(code, r, phi1.sorted(), opt);
      if (res.codeword == c) ++ok;
      for (auto [dst, src] : {std::pair{&sum.step1, res.ops.step1}, {&sum.step2, res.ops.step2},
                              {&sum.step3, res.ops.step3}, {&sum.step4, res.ops.step4},
                              {&sum.search, res.ops.search}, {&sum.step5a, res.ops.step5a},
                              {&sum.step5b, res.ops.step5b}, {&sum.step6, res.ops.step6}, {&sum.info, res.ops.info}})
        *dst += src;
    } catch (const DecodeError&) {
      ++undecodable;
    }
  }
  std::ostringstream os;
  os << code_summary(code) << "trials " << b.trials << " seed " << b.seed << " erasures " << b.erasures
     << " errors " << errors << " path " << (b.direct ? "direct" : "fast") << "\n"
     << "recovered " << ok << " undecodable " << undecodable << "\n"
     << "# summed field operations\n"
     << op_counter_report(sum);
  write_sink(io.output, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine variety codes over finite fields: transforms, bases, encoding and decoding"};
  app.require_subcommand(1);

  Common io;
  FieldOpts fo;
  std::string cfg = "hermitian", order = "lex", pts, phi_path, erasures;
  std::vector<int> weights;
  bool direct = false, fast = false, grid = false, rows = false, report = false;
  BenchOpts bo;

  auto add_field = [&](CLI::App* s) {
    s->add_option("--field", fo.field, "field preset (gf4, gf8, gf9, gf16) or field file")->capture_default_str();
    s->add_option("--dims", fo.dims, "number of variables N")->capture_default_str();
  };
  auto add_path = [&](CLI::App* s) {
    auto* d = s->add_flag("--direct", direct, "direct transform");
    auto* fp = s->add_flag("--fast", fast, "axis-by-axis transform (default)");
    d->excludes(fp);
  };

  auto* ft = app.add_subcommand("field-table", "print exponent, polynomial digits and Zech logarithm");
  ft->add_option("--field", fo.field, "field preset or field file")->capture_default_str();
  ft->add_option("-o,--output", io.output, "output file");

  auto* dft_c = app.add_subcommand("dft", "transform a word on F_q^N into a spectrum on A");
  auto* idft_c = app.add_subcommand("idft", "transform a spectrum on A into a word on F_q^N");
  for (auto* s : {dft_c, idft_c}) {
    add_field(s);
    add_path(s);
    add_io(s, io);
    s->add_flag("--grid", grid, "print a grid, first index down, second across");
  }

  auto* gb_c = app.add_subcommand("gb", "reduced Groebner basis of the vanishing ideal of a point set");
  add_field(gb_c);
  gb_c->add_option("points", pts, "point file, '-' for stdin")->required();
  gb_c->add_option("--order", order, "lex | grlex | weighted_grlex")->capture_default_str();
  gb_c->add_option("--weights", weights, "weights for weighted_grlex");
  gb_c->add_flag("--rows", rows, "list one element per row of A");
  gb_c->add_option("-o,--output", io.output, "output file");

  auto* ext_c = app.add_subcommand("extend", "extend a spectrum on D to all of A");
  auto* enc_c = app.add_subcommand("encode", "non-systematic encoding of a spectrum on D \\ B");
  auto* sys_c = app.add_subcommand("encode-sys", "systematic encoding with redundancy on a point set");
  auto* dec_c = app.add_subcommand("decode", "recover the information spectrum from a received word");
  auto* dw_c = app.add_subcommand("decode-word", "recover the codeword and the error from a received word");
  auto* chk_c = app.add_subcommand("check", "test whether a word is a codeword");
  for (auto* s : {ext_c, enc_c, sys_c, dec_c, dw_c, chk_c}) {
    s->add_option("-c,--config", cfg, "code preset or configuration file")->capture_default_str();
    add_io(s, io);
  }
  sys_c->add_option("--phi", phi_path, "redundancy point file")->required();
  for (auto* s : {dec_c, dw_c}) {
    s->add_option("--erasures", erasures, "erasure point file, added to '?' marks");
    s->add_flag("--report", report, "append the operation count per step");
  }
  add_path(dw_c);

  auto* ex_c = app.add_subcommand("examples", "run the bundled golden vectors");
  ex_c->add_option("-o,--output", io.output, "output file");

  auto* bench_c = app.add_subcommand("bench", "decode random words and report operation counts");
  bench_c->add_option("-c,--config", bo.config, "code preset or configuration file")->capture_default_str();
  bench_c->add_option("--seed", bo.seed, "random seed")->capture_default_str();
  bench_c->add_option("--trials", bo.trials, "number of words")->capture_default_str();
  bench_c->add_option("--erasures", bo.erasures, "erasures per word")->capture_default_str();
  bench_c->add_option("--errors", bo.errors, "errors per word, default fills the decoding radius");
  bench_c->add_flag("--direct", bo.direct, "direct inverse transform");
  bench_c->add_option("-o,--output", io.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*ft) return field_table(fo, io);
    if (*dft_c) return transform_cmd(false, fo, io, direct, grid);
    if (*idft_c) return transform_cmd(true, fo, io, direct, grid);
    if (*gb_c) return gb_cmd(fo, order, weights, pts, io, rows);
    if (*ext_c) return extend_cmd(cfg, io);
    if (*enc_c) return encode_cmd(cfg, io);
    if (*sys_c) return encode_sys_cmd(cfg, phi_path, io);
    if (*dec_c) return decode_cmd(cfg, erasures, io, false, false, report);
    if (*dw_c) return decode_cmd(cfg, erasures, io, true, direct, report);
    if (*chk_c) return check_cmd(cfg, io);
    if (*ex_c) return examples_cmd(io);
    if (*bench_c) return bench_cmd(bo, io);
  } catch (const DecodeError& e) {
    std::cerr << "undecodable: " << e.what() << "\n";
    return kUndecodable;
  } catch (const ConsistencyError& e) {
    std::cerr << "undecodable: " << e.what() << "\n";
    return kUndecodable;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const FieldError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kConfig;
}
