// Copyright 2026 The qmelt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmelt/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "qmelt/error.hpp"
#include "qmelt/number_format.hpp"

namespace qmelt {

namespace {

constexpr const char *kResultHeader =
    "cell,key,model,layout,angle_map,width,entangler,gate,depth,arch,l2_weight,n_params,"
    "train_rmse_scaled,test_rmse_scaled,train_rmse_c,test_rmse_c,k,fold_seed,base_seed,status";

constexpr const char *kExpressHeader =
    "ansatz,entangler,gate,width,depth,kl_divergence,mean_entanglement_entropy,n_pairs,n_bins,"
    "entropy_samples,seed";

std::ofstream open_for_write(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    return out;
}

void check_written(const std::ofstream &out, const std::filesystem::path &path) {
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

// Commas would break the table; statuses and keys never need them.
std::string sanitize(std::string text) {
    std::replace(text.begin(), text.end(), ',', ';');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

std::string format_row(const ResultRow &r) {
    std::ostringstream os;
    os << r.cell << ',' << sanitize(r.key) << ',' << r.model << ',' << r.layout << ','
       << r.angle_map << ',' << r.width << ',' << r.entangler << ',' << r.gate << ',' << r.depth
       << ',' << r.arch << ',' << format_double(r.l2_weight) << ',' << r.n_params << ','
       << format_double(r.train_rmse_scaled) << ',' << format_double(r.test_rmse_scaled) << ','
       << format_double(r.train_rmse_c) << ',' << format_double(r.test_rmse_c) << ',' << r.k
       << ',' << r.fold_seed << ',' << r.base_seed << ',' << sanitize(r.status);
    return os.str();
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path &path,
                                               const std::string &expected_header) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::string line;
    if (!std::getline(in, line) || line != expected_header) {
        throw ParseError(path.string() + ": unexpected header");
    }
    const auto n_cols =
        static_cast<std::size_t>(std::count(expected_header.begin(), expected_header.end(), ',')) +
        1;
    std::vector<std::vector<std::string>> rows;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (line.back() == ',') {
            cells.emplace_back();
        }
        if (cells.size() != n_cols) {
            throw ParseError(path.string() + ": row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells");
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::uint64_t to_u64(const std::string &s) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

double to_double(const std::string &s) {
    try {
        return parse_double(s);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

} // namespace

ResultRow to_row(std::size_t cell, const SweepCell &sweep_cell, const CvSettings &settings) {
    ResultRow row;
    row.cell = cell;
    row.key = model_key(sweep_cell.config);
    row.n_params = parameter_count(sweep_cell.config);
    row.k = settings.k;
    row.fold_seed = settings.fold_seed;
    row.base_seed = settings.base_seed;
    if (const auto *q = std::get_if<QnnConfig>(&sweep_cell.config)) {
        row.model = "qnn";
        row.layout = to_string(q->encoder.layout);
        row.angle_map = to_string(q->encoder.angle_map);
        row.width = q->ansatz.width;
        row.entangler = to_string(q->ansatz.entangler);
        row.gate = to_string(q->ansatz.gate);
        row.depth = q->ansatz.depth;
    } else if (const auto *m = std::get_if<MlpConfig>(&sweep_cell.config)) {
        row.model = "mlp";
        row.arch = m->arch.label();
        row.l2_weight = m->training.l2_weight;
    } else {
        row.model = "mean";
    }
    if (sweep_cell.result) {
        const CvResult &r = *sweep_cell.result;
        row.train_rmse_scaled = r.mean_train_rmse_scaled;
        row.test_rmse_scaled = r.mean_test_rmse_scaled;
        row.train_rmse_c = r.mean_train_rmse_celsius();
        row.test_rmse_c = r.mean_test_rmse_celsius();
        row.status = "ok";
    } else {
        row.status = "failed: " + sweep_cell.error;
    }
    return row;
}

std::string series_name(const ResultRow &row) {
    if (row.model == "qnn") {
        return "qnn/" + row.layout + "/" + row.angle_map + "/" + row.entangler + "/" + row.gate;
    }
    if (row.model == "mlp") {
        return "mlp/l2=" + format_double(row.l2_weight);
    }
    return row.model;
}

ResultTableWriter::ResultTableWriter(const std::filesystem::path &path)
    : out_{open_for_write(path)}, path_{path} {
    out_ << kResultHeader << '\n';
    out_.flush();
    check_written(out_, path_);
}

void ResultTableWriter::append(const ResultRow &row) {
    out_ << format_row(row) << '\n';
    out_.flush();
    check_written(out_, path_);
}

void write_result_table(const std::vector<ResultRow> &rows, const std::filesystem::path &path) {
    ResultTableWriter writer(path);
    for (const ResultRow &r : rows) {
        writer.append(r);
    }
}

std::vector<ResultRow> read_result_table(const std::filesystem::path &path) {
    std::vector<ResultRow> rows;
    for (const auto &c : read_csv(path, kResultHeader)) {
        ResultRow r;
        r.cell = to_u64(c[0]);
        r.key = c[1];
        r.model = c[2];
        r.layout = c[3];
        r.angle_map = c[4];
        r.width = to_u64(c[5]);
        r.entangler = c[6];
        r.gate = c[7];
        r.depth = to_u64(c[8]);
        r.arch = c[9];
        r.l2_weight = to_double(c[10]);
        r.n_params = to_u64(c[11]);
        r.train_rmse_scaled = to_double(c[12]);
        r.test_rmse_scaled = to_double(c[13]);
        r.train_rmse_c = to_double(c[14]);
        r.test_rmse_c = to_double(c[15]);
        r.k = to_u64(c[16]);
        r.fold_seed = to_u64(c[17]);
        r.base_seed = to_u64(c[18]);
        r.status = c[19];
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_rmse_series(const std::vector<ResultRow> &rows, const std::filesystem::path &path) {
    std::vector<const ResultRow *> ok;
    for (const ResultRow &r : rows) {
        if (r.status == "ok") {
            ok.push_back(&r);
        }
    }
    std::stable_sort(ok.begin(), ok.end(), [](const ResultRow *a, const ResultRow *b) {
        return std::make_tuple(series_name(*a), a->n_params) <
               std::make_tuple(series_name(*b), b->n_params);
    });
    auto out = open_for_write(path);
    out << "series,n_params,train_rmse_c,test_rmse_c\n";
    for (const ResultRow *r : ok) {
        out << series_name(*r) << ',' << r->n_params << ',' << format_double(r->train_rmse_c)
            << ',' << format_double(r->test_rmse_c) << '\n';
    }
    check_written(out, path);
}

void write_fold_table(const std::vector<CvResult> &results, const std::filesystem::path &path) {
    auto out = open_for_write(path);
    out << "key,fold,n_train,n_test,train_rmse_scaled,test_rmse_scaled,seed\n";
    for (const CvResult &r : results) {
        for (const FoldResult &f : r.folds) {
            out << sanitize(r.key) << ',' << f.fold << ',' << f.n_train << ',' << f.n_test << ','
                << format_double(f.train_rmse_scaled) << ',' << format_double(f.test_rmse_scaled)
                << ',' << f.seed << '\n';
        }
    }
    check_written(out, path);
}

ExpressRow to_row(const ExpressibilityReport &report) {
    ExpressRow row;
    row.entangler = to_string(report.ansatz.entangler);
    row.gate = to_string(report.ansatz.gate);
    row.ansatz = row.entangler + "-" + row.gate;
    row.width = report.ansatz.width;
    row.depth = report.ansatz.depth;
    row.kl_divergence = report.kl_divergence;
    row.mean_entanglement_entropy = report.mean_entanglement_entropy;
    row.n_pairs = report.n_samples;
    row.n_bins = report.n_bins;
    row.entropy_samples = report.entropy_samples;
    row.seed = report.seed;
    return row;
}

void write_express_table(const std::vector<ExpressRow> &rows, const std::filesystem::path &path) {
    auto out = open_for_write(path);
    out << kExpressHeader << '\n';
    for (const ExpressRow &r : rows) {
        out << r.ansatz << ',' << r.entangler << ',' << r.gate << ',' << r.width << ','
            << r.depth << ',' << format_double(r.kl_divergence) << ','
            << format_double(r.mean_entanglement_entropy) << ',' << r.n_pairs << ','
            << r.n_bins << ',' << r.entropy_samples << ',' << r.seed << '\n';
    }
    check_written(out, path);
}

std::vector<ExpressRow> read_express_table(const std::filesystem::path &path) {
    std::vector<ExpressRow> rows;
    for (const auto &c : read_csv(path, kExpressHeader)) {
        ExpressRow r;
        r.ansatz = c[0];
        r.entangler = c[1];
        r.gate = c[2];
        r.width = to_u64(c[3]);
        r.depth = to_u64(c[4]);
        r.kl_divergence = to_double(c[5]);
        r.mean_entanglement_entropy = to_double(c[6]);
        r.n_pairs = to_u64(c[7]);
        r.n_bins = to_u64(c[8]);
        r.entropy_samples = to_u64(c[9]);
        r.seed = to_u64(c[10]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_express_series(const std::vector<ExpressRow> &rows, const std::filesystem::path &dir) {
    std::vector<const ExpressRow *> sorted;
    for (const ExpressRow &r : rows) {
        sorted.push_back(&r);
    }
    std::stable_sort(sorted.begin(), sorted.end(), [](const ExpressRow *a, const ExpressRow *b) {
        return std::tie(a->ansatz, a->width, a->depth) < std::tie(b->ansatz, b->width, b->depth);
    });
    const auto kl_path = dir / "kl_series.csv";
    const auto entropy_path = dir / "entropy_series.csv";
    auto kl = open_for_write(kl_path);
    auto entropy = open_for_write(entropy_path);
    kl << "ansatz,width,depth,kl\n";
    entropy << "ansatz,width,depth,entropy\n";
    for (const ExpressRow *r : sorted) {
        kl << r->ansatz << ',' << r->width << ',' << r->depth << ','
           << format_double(r->kl_divergence) << '\n';
        entropy << r->ansatz << ',' << r->width << ',' << r->depth << ','
                << format_double(r->mean_entanglement_entropy) << '\n';
    }
    check_written(kl, kl_path);
    check_written(entropy, entropy_path);
}

namespace {

void ensure_directory(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create directory '" + dir.string() + "'");
    }
}

} // namespace

void emit_report(const std::vector<SweepCell> &cells, const CvSettings &settings,
                 const std::filesystem::path &dir) {
    if (cells.empty()) {
        throw InvalidArgument("nothing to report");
    }
    ensure_directory(dir);
    std::vector<ResultRow> rows;
    std::vector<CvResult> results;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        rows.push_back(to_row(i, cells[i], settings));
        if (cells[i].result) {
            results.push_back(*cells[i].result);
        }
    }
    write_result_table(rows, dir / "results.csv");
    write_fold_table(results, dir / "folds.csv");
    write_rmse_series(rows, dir / "series.csv");
}

void emit_report(const std::vector<ExpressibilityReport> &reports,
                 const std::filesystem::path &dir) {
    if (reports.empty()) {
        throw InvalidArgument("nothing to report");
    }
    ensure_directory(dir);
    std::vector<ExpressRow> rows;
    for (const auto &r : reports) {
        rows.push_back(to_row(r));
    }
    write_express_table(rows, dir / "expressibility.csv");
    write_express_series(rows, dir);
}

} // namespace qmelt
