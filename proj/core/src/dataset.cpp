#include "sbdsal/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "json.hpp"

#include "sbdsal/image_io.hpp"
#include "sbdsal/pipeline.hpp"

namespace sbdsal {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kImageExtensions[] = {".png", ".jpg", ".jpeg"};

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return std::any_of(std::begin(kImageExtensions), std::end(kImageExtensions),
                     [&](const char* e) { return ext == e; });
}

fs::path find_gt_mate(const fs::path& gt_dir, const std::string& stem) {
  for (const char* ext : kImageExtensions) {
    fs::path candidate = gt_dir / (stem + ext);
    if (fs::exists(candidate)) return candidate;
  }
  return {};
}

ImageResult process_one(const fs::path& image_path, const fs::path& gt_path,
                        const fs::path& out_dir, const PipelineConfig& cfg) {
  ImageResult res;
  res.name = image_path.stem().string();
  auto start = std::chrono::steady_clock::now();
  try {
    RgbImage img = read_image(image_path);
    PipelineResult maps = run_pipeline(img, cfg);
    write_gray_png(out_dir / (res.name + ".png"), maps.refined);
    if (cfg.emit_intermediate) {
      write_gray_png(out_dir / (res.name + "_scm.png"), maps.coarse);
      write_gray_png(out_dir / (res.name + "_sp.png"), maps.posterior);
    }
    res.ok = true;
    if (!gt_path.empty()) {
      try {
        BinaryMask gt = read_mask(gt_path);
        res.report = evaluate(maps.refined, gt);
        res.evaluated = true;
      } catch (const std::exception& e) {
        std::cerr << "sbdsal: warning: evaluation skipped for " << res.name << ": " << e.what()
                  << "\n";
      }
    }
  } catch (const std::exception& e) {
    res.ok = false;
    res.error = e.what();
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

json report_to_json(const EvalReport& r) {
  return json{{"mae", r.mae},
              {"auc", r.auc},
              {"adaptive",
               {{"precision", r.adaptive.precision},
                {"recall", r.adaptive.recall},
                {"f_measure", r.adaptive.fmeasure}}},
              {"pr_curve",
               {{"precision", r.precision}, {"recall", r.recall}, {"f_measure", r.fmeasure}}}};
}

void write_outputs(const DatasetRun& run, const fs::path& out_dir) {
  json doc;
  doc["processed"] = run.processed;
  doc["failed"] = run.failed;
  doc["evaluated"] = run.evaluated;
  doc["images"] = json::array();
  for (const ImageResult& r : run.images) {
    json entry{{"name", r.name}, {"ok", r.ok}, {"seconds", r.seconds}};
    if (!r.ok) entry["error"] = r.error;
    if (r.evaluated) entry["report"] = report_to_json(r.report);
    doc["images"].push_back(std::move(entry));
  }
  if (run.has_aggregate) doc["aggregate"] = report_to_json(run.aggregate_report);

  std::ofstream json_out(out_dir / "report.json");
  json_out << doc.dump(2) << "\n";

  if (run.has_aggregate) {
    std::ofstream csv(out_dir / "pr_curve.csv");
    csv << "threshold,precision,recall,f_measure\n";
    const EvalReport& agg = run.aggregate_report;
    for (int t = 0; t < kCurveThresholds; ++t)
      csv << t << "," << agg.precision[t] << "," << agg.recall[t] << "," << agg.fmeasure[t]
          << "\n";
  }
}

void finalize_counts(DatasetRun& run) {
  std::vector<EvalReport> reports;
  for (const ImageResult& r : run.images) {
    if (r.ok) run.processed++;
    else run.failed++;
    if (r.evaluated) {
      run.evaluated++;
      reports.push_back(r.report);
    }
  }
  if (!reports.empty()) {
    run.aggregate_report = aggregate(reports);
    run.has_aggregate = true;
  }
}

}  // namespace

DatasetRun run_dataset(const fs::path& input_dir, const fs::path& gt_dir,
                       const fs::path& out_dir, const PipelineConfig& cfg, int jobs) {
  cfg.validate();
  if (!fs::is_directory(input_dir))
    throw std::runtime_error("input directory does not exist: " + input_dir.string());
  if (!gt_dir.empty() && !fs::is_directory(gt_dir))
    throw std::runtime_error("ground-truth directory does not exist: " + gt_dir.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(input_dir))
    if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw std::runtime_error("no images found in " + input_dir.string());

  fs::create_directories(out_dir);

  DatasetRun run;
  run.images.resize(files.size());
  jobs = std::clamp(jobs, 1, 64);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
      fs::path gt =
          gt_dir.empty() ? fs::path{} : find_gt_mate(gt_dir, files[i].stem().string());
      run.images[i] = process_one(files[i], gt, out_dir, cfg);
      if (!run.images[i].ok)
        std::cerr << "sbdsal: warning: skipped " << files[i].filename().string() << ": "
                  << run.images[i].error << "\n";
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  finalize_counts(run);
  write_outputs(run, out_dir);
  return run;
}

ImageResult run_single(const fs::path& image_path, const fs::path& gt_path,
                       const fs::path& out_dir, const PipelineConfig& cfg) {
  cfg.validate();
  if (!fs::is_regular_file(image_path))
    throw std::runtime_error("input image does not exist: " + image_path.string());
  fs::create_directories(out_dir);

  ImageResult res = process_one(image_path, gt_path, out_dir, cfg);
  if (!res.ok) throw std::runtime_error(res.name + ": " + res.error);

  DatasetRun run;
  run.images.push_back(res);
  finalize_counts(run);
  write_outputs(run, out_dir);
  return res;
}

}  // namespace sbdsal
