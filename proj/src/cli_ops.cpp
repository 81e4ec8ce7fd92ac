#include "aitv/cli_ops.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aitv/errors.hpp"
#include "aitv/image_io.hpp"

namespace aitv {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

void make_dir(const std::string& path) {
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec) throw io_error("cannot create directory " + path + ": " + ec.message());
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw io_error("failed to write " + path.string());
}

ordered_json json_number_or_inf(double v) {
    if (std::isinf(v)) return ordered_json(v > 0.0 ? "inf" : "-inf");
    return ordered_json(v);
}

std::string csv_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

RunManifest resolve_autos(RunManifest m) {
    if (m.tol_outer == 0.0)
        m.tol_outer = m.model == "aicv" ? (m.phases == 2 ? 1e-4 : 1e-6) : 1e-4;
    if (m.max_outer == 0) m.max_outer = m.model == "aicv" ? 20 : 40;
    return m;
}

} // namespace

SegmentOutcome cmd_segment(const RunManifest& m_in) {
    validate(m_in);
    const RunManifest m = resolve_autos(m_in);

    Image f = read_png(m.input, m.grayscale);
    if (auto noise = parse_noise(m.noise, m.seed)) f = corrupt(f, *noise);

    SegmentOutcome outcome;
    int num_regions = 0;
    if (m.model == "aicv") {
        outcome.result = segment(f, aicv_config_from(m));
        num_regions = 1 << m.phases;
    } else {
        outcome.result = segment_fr(f, aifr_config_from(m));
        num_regions = m.regions;
    }
    const SegmentationResult& res = outcome.result;

    Image recon = reconstruct(res.labels, res.constants);
    outcome.psnr_vs_input = psnr(recon, f);
    if (!m.reference.empty())
        outcome.psnr_vs_reference = psnr(recon, read_png(m.reference, m.grayscale));
    if (!m.gt.empty()) {
        const GroundTruth gt = load_ground_truth(m.gt);
        const DiceMode mode =
            gt.constants.size() == 2 ? DiceMode::ForegroundOnly : DiceMode::MeanAll;
        outcome.dice_value = dice(res.labels, res.constants, gt, mode);
    }

    make_dir(m.out);
    const fs::path out(m.out);
    write_label_png((out / "labels.png").string(), res.labels, num_regions);
    write_png((out / "reconstruction.png").string(), recon);
    for (std::size_t k = 0; k < res.memberships.size(); ++k)
        write_png((out / ("membership_" + std::to_string(k + 1) + ".png")).string(),
                  res.memberships[k]);

    ordered_json j;
    j["model"] = m.model;
    j["converged"] = res.converged;
    j["outer_iterations"] = res.outer_iterations;
    j["objective_initial"] = res.objective_trace.front();
    j["objective_final"] = res.objective_trace.back();
    j["constants"] = res.constants;
    j["psnr_vs_input"] = json_number_or_inf(outcome.psnr_vs_input);
    if (outcome.psnr_vs_reference)
        j["psnr_vs_reference"] = json_number_or_inf(*outcome.psnr_vs_reference);
    if (outcome.dice_value) j["dice"] = *outcome.dice_value;
    write_text(out / "result.json", j.dump(2) + "\n");

    std::string trace = "outer_iter,objective,max_relerr,wall_ms\n";
    for (int t = 1; t <= res.outer_iterations; ++t) {
        trace += std::to_string(t);
        trace += ',';
        trace += format_double(res.objective_trace[t]);
        trace += ',';
        trace += format_double(res.relerr_trace[t - 1]);
        trace += ',';
        trace += format_double(res.wall_ms_trace[t - 1]);
        trace += '\n';
    }
    write_text(out / "trace.csv", trace);
    write_text(out / "manifest.json", manifest_to_json_string(m));
    return outcome;
}

void cmd_corrupt(const std::string& input, const NoiseSpec& spec, bool grayscale,
                 const std::string& out_dir) {
    Image f = read_png(input, grayscale);
    Image g = corrupt(f, spec);
    make_dir(out_dir);
    const fs::path out(out_dir);
    write_png((out / "corrupted.png").string(), g);
    ordered_json j;
    j["verb"] = "corrupt";
    j["input"] = input;
    j["grayscale"] = grayscale;
    j["noise_kind"] = spec.kind == NoiseKind::Spin ? "spin" : "rvin";
    j["noise_level"] = spec.level;
    j["noise_seed"] = spec.seed;
    j["out"] = out_dir;
    write_text(out / "manifest.json", j.dump(2) + "\n");
}

SweepResult cmd_sweep(const RunManifest& base_in, const SweepAxes& axes) {
    validate(base_in);
    if (axes.alphas.empty()) throw config_error("sweep alpha axis is empty");
    if (axes.levels.empty()) throw config_error("sweep noise-level axis is empty");
    if (axes.seeds.empty()) throw config_error("sweep seed axis is empty");
    if (base_in.gt.empty())
        throw config_error("sweep needs a gt path to score cells");
    const RunManifest base = resolve_autos(base_in);
    const std::string kind_name = axes.kind == NoiseKind::Spin ? "spin" : "rvin";

    SweepResult sr;
    std::vector<RunManifest> jobs;
    for (std::size_t i = 0; i < axes.alphas.size(); ++i)
        for (std::size_t j = 0; j < axes.levels.size(); ++j)
            for (std::size_t k = 0; k < axes.seeds.size(); ++k) {
                RunManifest cell = base;
                cell.alpha = axes.alphas[i];
                cell.noise = kind_name + ":" + format_double(axes.levels[j]);
                cell.seed = axes.seeds[k];
                cell.out = (fs::path(base.out) /
                            ("cell_a" + std::to_string(i) + "_l" + std::to_string(j) +
                             "_s" + std::to_string(k)))
                               .string();
                jobs.push_back(std::move(cell));
                SweepCell c;
                c.alpha = axes.alphas[i];
                c.level = axes.levels[j];
                c.seed = axes.seeds[k];
                sr.cells.push_back(c);
            }

    const int workers = thread_budget(static_cast<int>(jobs.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx; (idx = next.fetch_add(1)) < jobs.size();) {
            try {
                SegmentOutcome outcome = cmd_segment(jobs[idx]);
                if (!outcome.dice_value)
                    throw config_error("cell produced no dice value");
                sr.cells[idx].dice_value = *outcome.dice_value;
                sr.cells[idx].ok = true;
            } catch (const std::exception& e) {
                sr.cells[idx].error = e.what();
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const std::size_t nl = axes.levels.size(), ns = axes.seeds.size();
    sr.means.assign(axes.alphas.size(), std::vector<double>(nl, 0.0));
    for (std::size_t i = 0; i < axes.alphas.size(); ++i)
        for (std::size_t j = 0; j < nl; ++j) {
            double sum = 0.0;
            int ok = 0;
            for (std::size_t k = 0; k < ns; ++k) {
                const SweepCell& c = sr.cells[(i * nl + j) * ns + k];
                if (c.ok) {
                    sum += c.dice_value;
                    ++ok;
                }
            }
            sr.means[i][j] = ok > 0 ? sum / ok
                                    : std::numeric_limits<double>::quiet_NaN();
        }

    make_dir(base.out);
    const fs::path out(base.out);
    std::string summary = "alpha";
    for (double level : axes.levels) {
        summary += ',';
        summary += kind_name + ":" + format_double(level);
    }
    summary += '\n';
    for (std::size_t i = 0; i < axes.alphas.size(); ++i) {
        summary += format_double(axes.alphas[i]);
        for (std::size_t j = 0; j < nl; ++j) {
            summary += ',';
            summary += std::isnan(sr.means[i][j]) ? "ERR" : format_double(sr.means[i][j]);
        }
        summary += '\n';
    }
    write_text(out / "summary.csv", summary);

    std::string cells = "alpha,level,seed,dice,error\n";
    for (const SweepCell& c : sr.cells) {
        cells += format_double(c.alpha);
        cells += ',';
        cells += format_double(c.level);
        cells += ',';
        cells += std::to_string(c.seed);
        cells += ',';
        cells += c.ok ? format_double(c.dice_value) : "ERR";
        cells += ',';
        cells += c.error.empty() ? std::string() : csv_quote(c.error);
        cells += '\n';
    }
    write_text(out / "cells.csv", cells);
    write_text(out / "manifest.json", manifest_to_json_string(base));
    return sr;
}

void cmd_synth(const SynthArgs& args) {
    Synthetic s = make_synthetic(args.spec);
    const int n = static_cast<int>(args.spec.constants.size());
    make_dir(args.out);
    const fs::path out(args.out);
    write_png((out / "image.png").string(), s.image);
    write_label_png((out / "labels.png").string(), s.gt.labels, n);
    ordered_json j;
    j["regions"] = n;
    j["rows"] = args.spec.rows;
    j["cols"] = args.spec.cols;
    j["labels"] = "labels.png";
    j["constants"] = s.gt.constants;
    write_text(out / "gt.json", j.dump(2) + "\n");
}

GroundTruth load_ground_truth(const std::string& gt_json_path) {
    std::ifstream in(gt_json_path);
    if (!in) throw io_error("cannot open " + gt_json_path + " for reading");
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) throw config_error(gt_json_path + " is not valid json");
    GroundTruth gt;
    try {
        const int n = j.at("regions").get<int>();
        gt.constants = j.at("constants").get<Constants>();
        if (static_cast<int>(gt.constants.size()) != n)
            throw config_error(gt_json_path + " region count disagrees with constants");
        const fs::path labels_path =
            fs::path(gt_json_path).parent_path() / j.at("labels").get<std::string>();
        gt.labels = read_label_png(labels_path.string(), n);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(gt_json_path + " is missing ground-truth fields: " + e.what());
    }
    return gt;
}

int thread_budget(int jobs) {
    if (jobs < 1) return 1;
    int limit = 0;
    if (const char* env = std::getenv("AITV_THREADS")) {
        const std::string text(env);
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), limit);
        if (ec != std::errc{} || p != text.data() + text.size() || limit < 1)
            throw config_error("AITV_THREADS must be a positive integer, got '" +
                               text + "'");
    } else {
        limit = static_cast<int>(std::thread::hardware_concurrency());
        if (limit < 1) limit = 1;
    }
    return std::min(limit, jobs);
}

namespace {

struct CliOptions {
    std::string input;
    std::string config;
    RunManifest flags;  // values bound to CLI flags before merging
    std::string noise;
    std::string kind = "spin";
    std::vector<double> alphas, levels;
    std::vector<std::uint64_t> seeds;
    // synth
    int rows = 0, cols = 0, channels = 1;
    std::string geometry = "disk";
    std::vector<double> constants;
    double radius = 0.0;
    std::string out = ".";
};

void add_manifest_flags(CLI::App* sub, CliOptions& o) {
    sub->add_option("--config", o.config, "json manifest; flags override its values");
    sub->add_option("--model", o.flags.model, "aicv | aifr");
    sub->add_option("--alpha", o.flags.alpha, "concavity weight in [0,1]");
    sub->add_option("--lambda", o.flags.lambda, "fidelity weight");
    sub->add_option("--nu", o.flags.nu, "fuzzy sum-to-one coupling weight");
    sub->add_option("--phases", o.flags.phases, "aicv memberships (2^M regions)");
    sub->add_option("--regions", o.flags.regions, "aifr memberships");
    sub->add_option("--noise", o.flags.noise, "spin:<level> | rvin:<level>");
    sub->add_option("--seed", o.flags.seed, "run seed");
    sub->add_option("--init", o.flags.init, "auto | circle | twin | random");
    sub->add_option("--init-radius", o.flags.init_radius, "circle init radius");
    sub->add_flag("--grayscale", o.flags.grayscale, "force luminance conversion");
    sub->add_option("--gt", o.flags.gt, "ground-truth json for dice");
    sub->add_option("--reference", o.flags.reference, "clean image for a second psnr");
    sub->add_option("--out", o.flags.out, "output directory");
    sub->add_option("--max-outer", o.flags.max_outer, "outer iteration cap");
    sub->add_option("--max-inner", o.flags.max_inner, "inner iteration cap");
    sub->add_option("--tol-outer", o.flags.tol_outer, "outer stopping tolerance");
    sub->add_option("--tol-inner", o.flags.tol_inner, "inner stopping tolerance");
}

RunManifest merge_manifest(CLI::App* sub, const CliOptions& o) {
    RunManifest m;
    if (!o.config.empty()) m = manifest_from_json_file(o.config);
    if (sub->count("input")) m.input = o.input;
    if (sub->count("--model")) m.model = o.flags.model;
    if (sub->count("--alpha")) m.alpha = o.flags.alpha;
    if (sub->count("--lambda")) m.lambda = o.flags.lambda;
    if (sub->count("--nu")) m.nu = o.flags.nu;
    if (sub->count("--phases")) m.phases = o.flags.phases;
    if (sub->count("--regions")) m.regions = o.flags.regions;
    if (sub->count("--noise")) m.noise = o.flags.noise;
    if (sub->count("--seed")) m.seed = o.flags.seed;
    if (sub->count("--init")) m.init = o.flags.init;
    if (sub->count("--init-radius")) m.init_radius = o.flags.init_radius;
    if (sub->count("--grayscale")) m.grayscale = o.flags.grayscale;
    if (sub->count("--gt")) m.gt = o.flags.gt;
    if (sub->count("--reference")) m.reference = o.flags.reference;
    if (sub->count("--out")) m.out = o.flags.out;
    if (sub->count("--max-outer")) m.max_outer = o.flags.max_outer;
    if (sub->count("--max-inner")) m.max_inner = o.flags.max_inner;
    if (sub->count("--tol-outer")) m.tol_outer = o.flags.tol_outer;
    if (sub->count("--tol-inner")) m.tol_inner = o.flags.tol_inner;
    return m;
}

Geometry parse_geometry(const std::string& text) {
    if (text == "disk") return Geometry::Disk;
    if (text == "quadrants") return Geometry::Quadrants;
    if (text == "rings") return Geometry::Rings;
    if (text == "square") return Geometry::Square;
    if (text == "blobs") return Geometry::Blobs;
    throw config_error("geometry must be disk, quadrants, rings, square or blobs, got '" +
                       text + "'");
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"anisotropic-isotropic total-variation segmentation"};
    app.require_subcommand(1);
    CliOptions o;

    CLI::App* seg = app.add_subcommand("segment", "segment one image");
    seg->add_option("input", o.input, "input png");
    add_manifest_flags(seg, o);

    CLI::App* cor = app.add_subcommand("corrupt", "write an impulse-noised copy");
    cor->add_option("input", o.input, "input png")->required();
    cor->add_option("--noise", o.noise, "spin:<level> | rvin:<level>")->required();
    cor->add_option("--seed", o.flags.seed, "noise seed");
    cor->add_flag("--grayscale", o.flags.grayscale, "force luminance conversion");
    cor->add_option("--out", o.out, "output directory");

    CLI::App* swp = app.add_subcommand("sweep", "grid of segment runs");
    swp->add_option("input", o.input, "input png");
    add_manifest_flags(swp, o);
    swp->add_option("--alphas", o.alphas, "alpha axis")->delimiter(',');
    swp->add_option("--kind", o.kind, "noise kind for the level axis");
    swp->add_option("--levels", o.levels, "noise level axis")->delimiter(',');
    swp->add_option("--seeds", o.seeds, "seed axis")->delimiter(',');

    CLI::App* syn = app.add_subcommand("synth", "write a synthetic test image");
    syn->add_option("--rows", o.rows, "canvas rows")->required();
    syn->add_option("--cols", o.cols, "canvas cols")->required();
    syn->add_option("--geometry", o.geometry, "disk | quadrants | rings | square | blobs");
    syn->add_option("--constants", o.constants, "region constants, flattened")
        ->required()
        ->delimiter(',');
    syn->add_option("--channels", o.channels, "1 (gray) or 3 (color)");
    syn->add_option("--radius", o.radius, "disk radius / square half side (0 = default)");
    syn->add_option("--out", o.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seg->parsed()) {
            cmd_segment(merge_manifest(seg, o));
        } else if (cor->parsed()) {
            auto spec = parse_noise(o.noise, o.flags.seed);
            if (!spec) throw config_error("corrupt needs a nonempty noise spec");
            cmd_corrupt(o.input, *spec, o.flags.grayscale, o.out);
        } else if (swp->parsed()) {
            RunManifest base = merge_manifest(swp, o);
            SweepAxes axes;
            axes.alphas = o.alphas;
            axes.levels = o.levels;
            axes.seeds = o.seeds;
            if (o.kind == "spin") axes.kind = NoiseKind::Spin;
            else if (o.kind == "rvin") axes.kind = NoiseKind::Rvin;
            else throw config_error("kind must be spin or rvin, got '" + o.kind + "'");
            cmd_sweep(base, axes);
        } else if (syn->parsed()) {
            SynthArgs args;
            args.spec.rows = o.rows;
            args.spec.cols = o.cols;
            args.spec.geometry = parse_geometry(o.geometry);
            args.spec.radius = o.radius;
            if (o.channels != 1 && o.channels != 3)
                throw config_error("channels must be 1 or 3, got " +
                                   std::to_string(o.channels));
            if (o.constants.empty() || o.constants.size() % o.channels != 0)
                throw config_error("constants list does not chunk into regions of " +
                                   std::to_string(o.channels) + " channels");
            for (std::size_t i = 0; i < o.constants.size(); i += o.channels)
                args.spec.constants.emplace_back(o.constants.begin() + i,
                                                 o.constants.begin() + i + o.channels);
            args.out = o.out;
            cmd_synth(args);
        }
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const solver_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace aitv
