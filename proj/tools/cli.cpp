#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "conjugate/csv.hpp"
#include "conjugate/errors.hpp"
#include "conjugate/report_json.hpp"
#include "conjugate/sampling.hpp"

namespace conjugate::cli {

namespace {

constexpr const char* kConstantsEnv = "CONJUGATE_BENCH_CONSTANTS";

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table = {
      {"widths", Command::widths},           {"uncertainty", Command::uncertainty},
      {"corpus-audit", Command::corpus_audit}, {"sample", Command::sample},
      {"alias", Command::alias},             {"reconstruct", Command::reconstruct},
      {"brillouin", Command::brillouin},     {"hydrogen", Command::hydrogen},
  };
  return table;
}

double parse_number(const std::string& token, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used == token.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ParameterError(context + ": '" + token + "' is not a finite number");
}

template <class Fam>
using Setter = void (*)(Fam&, double);

template <class Fam>
Fam apply_parameters(const std::string& name, const std::string& params,
                     const std::map<std::string, Setter<Fam>>& setters) {
  Fam fam{};
  if (params.empty()) return fam;
  std::stringstream ss(params);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("family parameter '" + item + "' must look like key=value");
    }
    const std::string key = item.substr(0, eq);
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ParameterError("unknown parameter '" + key + "' for family " + name);
    }
    it->second(fam, parse_number(item.substr(eq + 1), name + "." + key));
  }
  return fam;
}

Json family_json(const SignalFamily& fam) {
  Json j;
  j["name"] = family_name(fam);
  Json p;
  std::visit(
      [&p](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Gaussian>) {
          p["sigma"] = f.sigma;
          p["center"] = f.center;
        } else if constexpr (std::is_same_v<T, family::Rectangle>) {
          p["halfwidth"] = f.halfwidth;
          p["center"] = f.center;
        } else if constexpr (std::is_same_v<T, family::TwoSidedExponential>) {
          p["decay"] = f.decay;
          p["center"] = f.center;
        } else if constexpr (std::is_same_v<T, family::TruncatedSinusoid>) {
          p["freq"] = f.freq;
          p["halfwidth"] = f.halfwidth;
        } else if constexpr (std::is_same_v<T, family::LinearChirp>) {
          p["f0"] = f.f0;
          p["f1"] = f.f1;
          p["halfwidth"] = f.halfwidth;
        } else {
          p["wavenumber"] = f.wavenumber;
        }
      },
      fam);
  j["parameters"] = std::move(p);
  return j;
}

Json grid_json(const Grid& g) {
  Json j;
  j["start"] = g.start();
  j["step"] = g.step();
  j["count"] = g.count();
  return j;
}

Json header(const RunConfig& config) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = to_string(config.command);
  return j;
}

struct LoadedSignal {
  SampledSignal signal;
  Json source;
};

LoadedSignal load_signal(const RunConfig& config) {
  if (config.input_path) {
    std::ifstream in(*config.input_path);
    if (!in) throw ParameterError("cannot open input file '" + *config.input_path + "'");
    SampledSignal sig = read_csv(in, config.domain);
    Json source;
    source["source"] = "csv";
    source["path"] = *config.input_path;
    source["grid"] = grid_json(sig.grid());
    return {std::move(sig), std::move(source)};
  }
  const SignalFamily& fam = config.families.front();
  Grid grid = default_grid(fam);
  if (config.span || config.count) {
    const double default_span = grid.step() * static_cast<double>(grid.count());
    const double center = grid.start() + 0.5 * default_span;
    grid = Grid::centered(center, config.span.value_or(default_span), config.count.value_or(grid.count()));
  }
  SampledSignal sig = generate(fam, grid, config.domain);
  Json source;
  source["source"] = "family";
  source["family"] = family_json(fam);
  source["grid"] = grid_json(grid);
  return {std::move(sig), std::move(source)};
}

double resolve_bound(const RunConfig& config) {
  if (const auto* choice = std::get_if<BoundChoice>(&config.bound)) {
    return dimensionless_bound(*choice, config.convention);
  }
  return std::get<double>(config.bound);
}

Json bound_json(const RunConfig& config) {
  if (const auto* choice = std::get_if<BoundChoice>(&config.bound)) return to_string(*choice);
  return "custom";
}

void emit_json(std::ostream& out, const Json& doc) { out << dump(doc); }

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

void run_widths(const RunConfig& config, std::ostream& out) {
  const LoadedSignal loaded = load_signal(config);
  if (config.output == OutputFormat::csv) {
    write_csv(out, loaded.signal);
    return;
  }
  Json doc = header(config);
  doc["input"] = loaded.source;
  doc["report"] = to_json(width_report(loaded.signal));
  emit_json(out, doc);
}

void run_uncertainty(const RunConfig& config, const PhysicalConstants& constants, std::ostream& out) {
  const LoadedSignal loaded = load_signal(config);
  if (config.output == OutputFormat::csv) {
    write_csv(out, transform(loaded.signal, config.convention));
    return;
  }
  const UncertaintyReport report = uncertainty_product(loaded.signal, config.convention, resolve_bound(config));
  Json doc = header(config);
  doc["input"] = loaded.source;
  doc["bound"] = bound_json(config);
  merge(doc, to_json(report));
  if (config.sweep) {
    doc["bound_sweep"] = to_json(bound_sweep(loaded.signal));
  }
  if (config.pair) {
    const BoundChoice choice =
        std::holds_alternative<BoundChoice>(config.bound) ? std::get<BoundChoice>(config.bound) : BoundChoice::hbar_over_2;
    doc["conjugate_pair"] = to_json(uncertainty_in_units(loaded.signal, *config.pair, constants, choice));
    doc["constants"] = to_json(constants);
  }
  emit_json(out, doc);
}

void run_corpus_audit(const RunConfig& config, std::ostream& out) {
  const std::vector<SignalFamily> families = config.families.empty() ? default_corpus() : config.families;
  const CorpusAudit audit = corpus_audit(families, config.convention, resolve_bound(config));
  if (config.output == OutputFormat::csv) {
    out << "family,convention,product,bound_constant,satisfied,width_reliable,error\n";
    for (const auto& e : audit.entries) {
      out << e.family << ',' << to_string(config.convention) << ',';
      if (e.report) {
        out << format_number(e.report->product) << ',' << format_number(e.report->bound_constant) << ','
            << (e.report->satisfied ? "true" : "false") << ',' << (e.report->width_reliable ? "true" : "false")
            << ",\n";
      } else {
        out << ",,,,\"" << e.error << "\"\n";
      }
    }
    return;
  }
  Json doc = header(config);
  doc["bound"] = bound_json(config);
  merge(doc, to_json(audit));
  emit_json(out, doc);
}

void run_sample(const RunConfig& config, std::ostream& out) {
  const LoadedSignal loaded = load_signal(config);
  SampledSignal result = sample(loaded.signal, config.factor);
  if (config.truncation_limit) result = truncate(result, *config.truncation_limit);
  if (config.output == OutputFormat::csv) {
    write_csv(out, result);
    return;
  }
  const double input_energy = energy(loaded.signal);
  Json doc = header(config);
  doc["input"] = loaded.source;
  doc["decimation_factor"] = config.factor;
  doc["output_grid"] = grid_json(result.grid());
  doc["scenario"] = to_json(scenario_from_sampling(result.grid().step(), config.truncation_limit));
  doc["input_energy"] = input_energy;
  doc["output_energy"] = energy(result);
  emit_json(out, doc);
}

void run_alias(const RunConfig& config, std::ostream& out) {
  const AliasReport report = alias_fold(config.frequency, config.rate);
  if (config.output == OutputFormat::csv) {
    out << "true_frequency,sampling_rate,apparent_frequency,aliased\n"
        << format_number(report.true_frequency) << ',' << format_number(report.sampling_rate) << ','
        << format_number(report.apparent_frequency) << ',' << (report.aliased ? "true" : "false") << '\n';
    return;
  }
  Json doc = header(config);
  merge(doc, to_json(report));
  doc["nyquist_rate"] = nyquist_rate(config.frequency);
  emit_json(out, doc);
}

void run_reconstruct(const RunConfig& config, std::ostream& out) {
  const LoadedSignal loaded = load_signal(config);
  const SampledSignal sampled = sample(loaded.signal, config.factor);
  const SampledSignal rebuilt = reconstruct(sampled, loaded.signal.grid());
  if (config.output == OutputFormat::csv) {
    write_csv(out, rebuilt);
    return;
  }
  const Grid& g = loaded.signal.grid();
  const double lo = g.start() + 0.1 * (g.last() - g.start());
  const double hi = g.last() - 0.1 * (g.last() - g.start());
  double sum_sq = 0.0;
  double worst = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < g.count(); ++i) {
    if (g.point(i) < lo || g.point(i) > hi) continue;
    const double e = std::abs(rebuilt[i] - loaded.signal[i]);
    sum_sq += e * e;
    worst = std::max(worst, e);
    ++used;
  }
  Json doc = header(config);
  doc["input"] = loaded.source;
  doc["decimation_factor"] = config.factor;
  doc["sampled_grid"] = grid_json(sampled.grid());
  doc["nyquist_limit"] = scenario_from_sampling(sampled.grid().step()).nyquist_conjugate_limit;
  doc["central_fraction"] = 0.8;
  doc["central_rms_error"] = used ? std::sqrt(sum_sq / static_cast<double>(used)) : 0.0;
  doc["central_max_error"] = worst;
  emit_json(out, doc);
}

void run_brillouin(const RunConfig& config, const PhysicalConstants& constants, std::ostream& out) {
  const BrillouinZone zone(config.lattice_spacing);
  const ReducedWavenumber reduced = brillouin_reduce(config.wavenumber, zone);
  std::optional<ReducedWavenumber> other;
  std::optional<bool> aliased;
  if (config.compare_wavenumber) {
    other = brillouin_reduce(*config.compare_wavenumber, zone);
    aliased = lattice_alias_check(config.wavenumber, *config.compare_wavenumber, zone, config.sites);
  }
  if (config.output == OutputFormat::csv) {
    out << "k,reduced_k,zone_index\n";
    out << format_number(config.wavenumber) << ',' << format_number(reduced.reduced_k) << ',' << reduced.zone_index
        << '\n';
    if (other) {
      out << format_number(*config.compare_wavenumber) << ',' << format_number(other->reduced_k) << ','
          << other->zone_index << '\n';
    }
    return;
  }
  Json doc = header(config);
  doc["k"] = config.wavenumber;
  merge(doc, to_json(reduced, zone));
  if (other) {
    Json cmp;
    cmp["k"] = *config.compare_wavenumber;
    cmp["reduced_k"] = other->reduced_k;
    cmp["zone_index"] = other->zone_index;
    cmp["sites"] = config.sites;
    cmp["lattice_aliased"] = *aliased;
    doc["compare"] = std::move(cmp);
  }
  doc["physical_limits"] = to_json(physical_limits(scenario_from_sampling(config.lattice_spacing), constants));
  emit_json(out, doc);
}

void run_hydrogen(const RunConfig& config, const PhysicalConstants& constants, std::ostream& out) {
  if (config.n_max) {
    if (*config.n_max < 2) throw ParameterError("--n-max must be at least 2");
    std::vector<HydrogenicTransition> sweep;
    for (int n = 2; n <= *config.n_max; ++n) sweep.push_back(observability(n, n - 1, config.z, constants));
    if (config.output == OutputFormat::csv) {
      out << "n,m,Z,lifetime_tau_n,transition_energy_E_mn,min_resolvable_energy,margin,observable\n";
      for (const auto& t : sweep) {
        out << t.n << ',' << t.m << ',' << t.z << ',' << format_number(t.lifetime_tau_n) << ','
            << format_number(t.transition_energy_E_mn) << ',' << format_number(t.min_resolvable_energy) << ','
            << format_number(t.margin) << ',' << (t.observable ? "true" : "false") << '\n';
      }
      return;
    }
    Json doc = header(config);
    doc["constants"] = to_json(constants);
    Json rows = Json::array();
    for (const auto& t : sweep) rows.push_back(to_json(t));
    doc["adjacent_sweep"] = std::move(rows);
    emit_json(out, doc);
    return;
  }
  const HydrogenicTransition t = observability(config.n, config.m, config.z, constants);
  if (config.output == OutputFormat::csv) {
    out << "n,m,Z,lifetime_tau_n,transition_energy_E_mn,min_resolvable_energy,margin,observable\n"
        << t.n << ',' << t.m << ',' << t.z << ',' << format_number(t.lifetime_tau_n) << ','
        << format_number(t.transition_energy_E_mn) << ',' << format_number(t.min_resolvable_energy) << ','
        << format_number(t.margin) << ',' << (t.observable ? "true" : "false") << '\n';
    return;
  }
  Json doc = header(config);
  doc["constants"] = to_json(constants);
  merge(doc, to_json(t));
  emit_json(out, doc);
}

void dispatch(const RunConfig& config, const PhysicalConstants& constants, std::ostream& out) {
  switch (config.command) {
    case Command::widths:
      return run_widths(config, out);
    case Command::uncertainty:
      return run_uncertainty(config, constants, out);
    case Command::corpus_audit:
      return run_corpus_audit(config, out);
    case Command::sample:
      return run_sample(config, out);
    case Command::alias:
      return run_alias(config, out);
    case Command::reconstruct:
      return run_reconstruct(config, out);
    case Command::brillouin:
      return run_brillouin(config, constants, out);
    case Command::hydrogen:
      return run_hydrogen(config, constants, out);
  }
}

Json error_json(std::string_view command, const std::string& kind, const std::string& message) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  doc["error"] = std::move(e);
  return doc;
}

}  // namespace

std::string_view to_string(Command command) noexcept {
  for (const auto& [name, c] : command_table()) {
    if (c == command) return name;
  }
  return "unknown";
}

SignalFamily parse_family(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (name == "gaussian") {
    return apply_parameters<family::Gaussian>(
        name, params,
        {{"sigma", [](family::Gaussian& f, double v) { f.sigma = v; }},
         {"center", [](family::Gaussian& f, double v) { f.center = v; }}});
  }
  if (name == "rectangle") {
    return apply_parameters<family::Rectangle>(
        name, params,
        {{"halfwidth", [](family::Rectangle& f, double v) { f.halfwidth = v; }},
         {"center", [](family::Rectangle& f, double v) { f.center = v; }}});
  }
  if (name == "two_sided_exponential" || name == "exponential") {
    return apply_parameters<family::TwoSidedExponential>(
        name, params,
        {{"decay", [](family::TwoSidedExponential& f, double v) { f.decay = v; }},
         {"center", [](family::TwoSidedExponential& f, double v) { f.center = v; }}});
  }
  if (name == "truncated_sinusoid") {
    return apply_parameters<family::TruncatedSinusoid>(
        name, params,
        {{"freq", [](family::TruncatedSinusoid& f, double v) { f.freq = v; }},
         {"halfwidth", [](family::TruncatedSinusoid& f, double v) { f.halfwidth = v; }}});
  }
  if (name == "linear_chirp" || name == "chirp") {
    return apply_parameters<family::LinearChirp>(
        name, params,
        {{"f0", [](family::LinearChirp& f, double v) { f.f0 = v; }},
         {"f1", [](family::LinearChirp& f, double v) { f.f1 = v; }},
         {"halfwidth", [](family::LinearChirp& f, double v) { f.halfwidth = v; }}});
  }
  if (name == "plane_wave") {
    return apply_parameters<family::PlaneWave>(
        name, params, {{"wavenumber", [](family::PlaneWave& f, double v) { f.wavenumber = v; }},
                       {"k", [](family::PlaneWave& f, double v) { f.wavenumber = v; }}});
  }
  throw ParameterError("unknown signal family '" + name + "'");
}

std::string usage() {
  return "usage: conjugate-bench <command> [options]\n"
         "\n"
         "commands:\n"
         "  widths        mean ordinate and effective width of a signal\n"
         "  uncertainty   width product of a signal and its transform\n"
         "  corpus-audit  width products over a set of signal families\n"
         "  sample        decimate (and optionally truncate) a signal\n"
         "  alias         fold a frequency into the band of a sampling rate\n"
         "  reconstruct   decimate a signal and rebuild it by sinc interpolation\n"
         "  brillouin     reduce a wavenumber to the first Brillouin zone\n"
         "  hydrogen      lifetime, transition energy and observability of n -> m\n"
         "\n"
         "run 'conjugate-bench <command> --help' for the options of a command\n";
}

std::variant<RunConfig, UsageError> parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Fourier width products, sampling limits and their quantum counterparts", "conjugate-bench"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> family_texts;
  std::string convention = "omega";
  std::string bound = "hbar_over_2";
  std::string domain = "generic";
  std::string output = "json";
  std::string pair;
  std::optional<double> span;
  std::optional<std::size_t> count;
  std::optional<std::string> input;
  std::optional<std::string> out_path;
  std::optional<double> truncation;
  std::optional<double> compare_k;
  std::optional<int> n_max;

  const std::vector<std::string> conventions = {"nu", "omega"};
  const std::vector<std::string> domains = {"time", "position", "generic"};
  const std::vector<std::string> outputs = {"json", "csv"};
  const std::vector<std::string> pairs = {"position_momentum", "time_energy"};

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "report format")->check(CLI::IsMember(outputs));
    sub->add_option("--out", out_path, "write the report to this path instead of stdout");
  };
  auto add_signal = [&](CLI::App* sub) {
    sub->add_option("--family", family_texts, "signal family, e.g. gaussian:sigma=1,center=0")->expected(1);
    sub->add_option("--input", input, "CSV signal (index,coordinate,re,im)");
    sub->add_option("--domain", domain, "domain label of the signal")->check(CLI::IsMember(domains));
    sub->add_option("--span", span, "grid span override")->check(CLI::PositiveNumber);
    sub->add_option("--count", count, "grid point count override")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  };
  auto add_convention = [&](CLI::App* sub) {
    sub->add_option("--convention", convention, "transform convention")->check(CLI::IsMember(conventions));
    sub->add_option("--bound", bound, "h_over_2, hbar_over_2 or a dimensionless constant");
  };

  auto* widths = app.add_subcommand("widths", "mean ordinate and effective width of a signal");
  add_signal(widths);
  add_output(widths);

  auto* uncertainty = app.add_subcommand("uncertainty", "width product of a signal and its transform");
  add_signal(uncertainty);
  add_convention(uncertainty);
  add_output(uncertainty);
  uncertainty->add_option("--pair", pair, "also report the product in physical units")->check(CLI::IsMember(pairs));
  uncertainty->add_flag("--sweep", config.sweep, "evaluate every bound constant under both conventions");

  auto* audit = app.add_subcommand("corpus-audit", "width products over a set of signal families");
  audit->add_option("--family", family_texts, "signal family (repeatable); default corpus if omitted");
  add_convention(audit);
  add_output(audit);

  auto* samp = app.add_subcommand("sample", "decimate (and optionally truncate) a signal");
  add_signal(samp);
  add_output(samp);
  samp->add_option("--factor", config.factor, "decimation factor")->check(CLI::PositiveNumber);
  samp->add_option("--truncate", truncation, "zero samples farther than this from the grid midpoint")
      ->check(CLI::PositiveNumber);

  auto* alias = app.add_subcommand("alias", "fold a frequency into the band of a sampling rate");
  alias->add_option("--f", config.frequency, "true frequency")->required()->check(CLI::NonNegativeNumber);
  alias->add_option("--rate", config.rate, "sampling rate")->required()->check(CLI::PositiveNumber);
  add_output(alias);

  auto* rec = app.add_subcommand("reconstruct", "decimate a signal and rebuild it by sinc interpolation");
  add_signal(rec);
  add_output(rec);
  rec->add_option("--factor", config.factor, "decimation factor")->check(CLI::PositiveNumber);

  auto* bz = app.add_subcommand("brillouin", "reduce a wavenumber to the first Brillouin zone");
  bz->add_option("--a", config.lattice_spacing, "lattice spacing")->required()->check(CLI::PositiveNumber);
  bz->add_option("--k", config.wavenumber, "wavenumber")->required();
  bz->add_option("--k2", compare_k, "second wavenumber for the lattice alias check");
  bz->add_option("--sites", config.sites, "lattice sites sampled by the alias check")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  add_output(bz);

  auto* hyd = app.add_subcommand("hydrogen", "lifetime, transition energy and observability of n -> m");
  hyd->add_option("--n", config.n, "upper level");
  hyd->add_option("--m", config.m, "lower level");
  hyd->add_option("--Z", config.z, "nuclear charge");
  hyd->add_option("--n-max", n_max, "sweep adjacent transitions n -> n-1 for n = 2..n-max");
  add_output(hyd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    return UsageError{subs.empty() ? usage() : subs.front()->help(), true};
  } catch (const CLI::ParseError& e) {
    return UsageError{std::string(e.what()) + "\n\n" + usage()};
  }

  const auto* chosen = app.get_subcommands().front();
  config.command = command_table().at(chosen->get_name());
  config.convention = parse_convention(convention);
  config.domain = domain == "time" ? Domain::time : domain == "position" ? Domain::position : Domain::generic;
  config.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
  config.output_path = out_path;
  config.span = span;
  config.count = count;
  config.input_path = input;
  config.truncation_limit = truncation;
  config.compare_wavenumber = compare_k;
  config.n_max = n_max;
  if (!pair.empty()) config.pair = parse_pair_kind(pair);

  try {
    if (bound == "h_over_2" || bound == "hbar_over_2") {
      config.bound = parse_bound_choice(bound);
    } else {
      config.bound = parse_number(bound, "--bound");
    }
    for (const auto& text : family_texts) config.families.push_back(parse_family(text));
  } catch (const Error& e) {
    return UsageError{std::string(e.what()) + "\n\n" + usage()};
  }

  const bool signal_command = config.command == Command::widths || config.command == Command::uncertainty ||
                              config.command == Command::sample || config.command == Command::reconstruct;
  if (signal_command) {
    if (config.families.empty() == !config.input_path.has_value()) {
      return UsageError{"exactly one of --family or --input is required\n\n" + usage()};
    }
    if (config.input_path && (config.span || config.count)) {
      return UsageError{"--span/--count apply to --family signals only\n\n" + usage()};
    }
  }
  return config;
}

int run(const RunConfig& config, const PhysicalConstants& constants, std::ostream& out) {
  std::ostringstream buffer;
  try {
    dispatch(config, constants, buffer);
  } catch (const Error& e) {
    emit_json(out, error_json(to_string(config.command), e.kind(), e.what()));
    return kExitComputation;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      emit_json(out, error_json(to_string(config.command), "io", "cannot write '" + *config.output_path + "'"));
      return kExitComputation;
    }
    return kExitOk;
  }
  out << buffer.str();
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto parsed = parse_config(args);
  if (const auto* usage_error = std::get_if<UsageError>(&parsed)) {
    (usage_error->help ? out : err) << usage_error->message;
    return usage_error->help ? kExitOk : kExitUsage;
  }
  const RunConfig& config = std::get<RunConfig>(parsed);

  PhysicalConstants constants;
  if (const char* path = std::getenv(kConstantsEnv); path != nullptr && *path != '\0') {
    try {
      std::ifstream in(path);
      if (!in) throw ParameterError(std::string("cannot open constants file '") + path + "'");
      nlohmann::json document;
      try {
        document = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("constants file is not valid JSON: ") + e.what());
      }
      constants = constants_from_json(document);
    } catch (const Error& e) {
      emit_json(out, error_json(to_string(config.command), "constants", e.what()));
      return kExitComputation;
    }
  }
  return run(config, constants, out);
}

}  // namespace conjugate::cli
