#include "pril/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace pril {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cell);
            cell.clear();
        } else if (ch != '\r') {
            cell.push_back(ch);
        }
    }
    out.push_back(cell);
    for (std::string& c : out) {
        std::size_t a = c.find_first_not_of(" \t");
        std::size_t b = c.find_last_not_of(" \t");
        c = (a == std::string::npos) ? std::string() : c.substr(a, b - a + 1);
    }
    return out;
}

bool parse_finite(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + s.size()) return false;
    if (!std::isfinite(v)) return false;
    out = v;
    return true;
}

}  // namespace

int synth_rank(double value) {
    if (value > 1.0) return 5;
    if (value > 0.25) return 4;
    if (value > -0.1) return 3;
    if (value > -1.0) return 2;
    return 1;
}

LabeledDataset synth_generate(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    LabeledDataset ds;
    ds.k = 5;
    ds.instances.reserve(n);
    ds.true_ranks.reserve(n);
    ds.intervals.reserve(n);
    ds.is_partial.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        double x1 = rng.next_double();
        double x2 = rng.next_double();
        double noise = rng.normal(0.0, 0.125);
        int y = synth_rank(10.0 * (x1 - 0.5) * (x2 - 0.5) + noise);
        ds.instances.push_back(Vec{x1, x2});
        ds.true_ranks.push_back(y);
        ds.intervals.push_back(IntervalLabel{y, y});
    }
    return ds;
}

IntervalLabel interval_type1(int y, int k, Rng& rng) {
    validate_label(IntervalLabel{y, y}, k);
    if (y == 1) return IntervalLabel{1, 2};
    if (y == k) return IntervalLabel{k - 1, k};
    return rng.coin() ? IntervalLabel{y - 1, y} : IntervalLabel{y, y + 1};
}

IntervalLabel interval_type2(int y, int k) {
    validate_label(IntervalLabel{y, y}, k);
    if (y == 1) return IntervalLabel{1, 2};
    if (y == k) return IntervalLabel{k - 1, k};
    return IntervalLabel{y - 1, y + 1};
}

LabeledDataset mix_partial(const LabeledDataset& base, double fraction, int label_type,
                           Rng& rng) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("fraction of partial labels must lie in [0, 1]");
    }
    if (label_type != 1 && label_type != 2) {
        throw std::invalid_argument("interval label type must be 1 or 2, got " +
                                    std::to_string(label_type));
    }
    const std::size_t n = base.size();
    std::size_t m = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
    std::vector<char> chosen(n, 0);
    std::vector<std::size_t> perm = rng.permutation(n);
    for (std::size_t i = 0; i < m; ++i) chosen[perm[i]] = 1;

    LabeledDataset out = base;
    for (std::size_t i = 0; i < n; ++i) {
        int y = base.true_ranks[i];
        if (chosen[i]) {
            out.intervals[i] =
                (label_type == 1) ? interval_type1(y, base.k, rng) : interval_type2(y, base.k);
            out.is_partial[i] = 1;
        } else {
            out.intervals[i] = IntervalLabel{y, y};
            out.is_partial[i] = 0;
        }
    }
    return out;
}

SeparableResult make_separable(const SeparableSpec& spec, std::uint64_t seed) {
    const int k = static_cast<int>(spec.theta_star.size()) + 1;
    if (spec.w_star.empty()) throw std::invalid_argument("comparator weights must be non-empty");
    if (spec.theta_star.empty()) throw std::invalid_argument("comparator needs at least one threshold");
    for (std::size_t i = 1; i < spec.theta_star.size(); ++i) {
        if (spec.theta_star[i] < spec.theta_star[i - 1]) {
            throw std::invalid_argument("comparator thresholds must be non-decreasing");
        }
    }
    if (!(spec.gamma > 0.0)) throw std::invalid_argument("margin gamma must be > 0");
    if (spec.n == 0) throw std::invalid_argument("row count n must be >= 1");
    if (!(spec.box_lo < spec.box_hi)) throw std::invalid_argument("instance box must have box_lo < box_hi");
    if (spec.norm == SeparableSpec::Norm::L2) {
        double nrm = l2_norm_sq(spec.w_star) + l2_norm_sq(spec.theta_star);
        if (std::fabs(nrm - 1.0) > 1e-9) {
            throw std::invalid_argument("comparator must satisfy |w|^2 + |theta|^2 = 1");
        }
    } else {
        for (double v : spec.w_star) {
            if (v < 0.0) throw std::invalid_argument("L1 comparator components must be >= 0");
        }
        for (double v : spec.theta_star) {
            if (v < 0.0) throw std::invalid_argument("L1 comparator components must be >= 0");
        }
        double nrm = l1_norm(spec.w_star) + l1_norm(spec.theta_star);
        if (std::fabs(nrm - 1.0) > 1e-9) {
            throw std::invalid_argument("L1 comparator must have total mass 1");
        }
    }
    int max_width = spec.max_width < 0 ? k - 2 : std::min(spec.max_width, k - 1);
    std::size_t budget = spec.max_attempts == 0 ? 1000 * spec.n : spec.max_attempts;

    // Interval draw: one index, uniform over all (lo, hi) pairs with
    // hi - lo <= max_width. Pair counts per width are k, k-1, ...
    std::size_t pair_total = 0;
    for (int wd = 0; wd <= max_width; ++wd) pair_total += static_cast<std::size_t>(k - wd);

    const std::size_t d = spec.w_star.size();
    Rng rng(seed);
    SeparableResult res;
    res.data.k = k;
    res.min_margin = std::numeric_limits<double>::infinity();
    std::size_t attempts = 0;
    while (res.data.size() < spec.n) {
        if (++attempts > budget) {
            throw std::runtime_error(
                "separable sampling budget exhausted after " + std::to_string(budget) +
                " attempts; margin " + std::to_string(spec.gamma) +
                " looks unattainable for this comparator");
        }
        Vec x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = rng.uniform(spec.box_lo, spec.box_hi);
        std::size_t pick = rng.next_index(pair_total);
        int wd = 0;
        while (pick >= static_cast<std::size_t>(k - wd)) {
            pick -= static_cast<std::size_t>(k - wd);
            ++wd;
        }
        IntervalLabel lab{static_cast<int>(pick) + 1, static_cast<int>(pick) + 1 + wd};

        double score = dot(spec.w_star, x);
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& [i, z] : dummy_labels(lab, k).entries) {
            worst = std::min(worst, static_cast<double>(z) * (score - spec.theta_star[i - 1]));
        }
        if (worst < spec.gamma) continue;

        res.r_sq = std::max(res.r_sq, l2_norm_sq(x));
        res.c = res.data.instances.empty() ? lab.width() : std::min(res.c, lab.width());
        if (worst < res.min_margin) res.min_margin = worst;
        res.data.instances.push_back(std::move(x));
        res.data.true_ranks.push_back(predict_rank(score, spec.theta_star));
        res.data.intervals.push_back(lab);
        res.data.is_partial.push_back(lab.width() > 0 ? 1 : 0);
    }
    return res;
}

LabeledDataset load_ordinal_csv(const std::string& path, const CsvLoadOptions& opts) {
    if (!opts.bin_edges.empty() && opts.equal_width_bins != 0) {
        throw std::invalid_argument("bin_edges and equal_width_bins are mutually exclusive");
    }
    for (std::size_t i = 1; i < opts.bin_edges.size(); ++i) {
        if (!(opts.bin_edges[i] > opts.bin_edges[i - 1])) {
            throw std::invalid_argument("bin edges must be strictly ascending");
        }
    }
    if (opts.equal_width_bins != 0 && opts.equal_width_bins < 2) {
        throw std::invalid_argument("equal_width_bins must be >= 2 when set");
    }

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(split_line(line));
    }
    if (rows.size() < 2) throw std::runtime_error(path + ": need a header row and at least one data row");
    const std::vector<std::string> header = rows[0];
    const std::size_t ncol = header.size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != ncol) {
            throw std::runtime_error(path + ": row " + std::to_string(r + 1) + " has " +
                                     std::to_string(rows[r].size()) + " fields, expected " +
                                     std::to_string(ncol));
        }
    }
    std::size_t target = ncol - 1;
    if (!opts.target_column.empty()) {
        bool found = false;
        for (std::size_t c = 0; c < ncol; ++c) {
            if (header[c] == opts.target_column) {
                target = c;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error(path + ": no column named '" + opts.target_column + "'");
    }

    const std::size_t nrow = rows.size() - 1;
    std::vector<double> targets(nrow);
    for (std::size_t r = 0; r < nrow; ++r) {
        if (!parse_finite(rows[r + 1][target], targets[r])) {
            throw std::runtime_error(path + ": non-numeric target '" + rows[r + 1][target] +
                                     "' at row " + std::to_string(r + 2));
        }
    }

    // Feature columns: fully numeric ones pass through; others are one-hot
    // expanded or dropped.
    std::vector<std::vector<double>> cols;
    for (std::size_t c = 0; c < ncol; ++c) {
        if (c == target) continue;
        std::vector<double> vals(nrow);
        bool numeric = true;
        for (std::size_t r = 0; r < nrow; ++r) {
            if (!parse_finite(rows[r + 1][c], vals[r])) {
                numeric = false;
                break;
            }
        }
        if (numeric) {
            cols.push_back(std::move(vals));
        } else if (opts.one_hot) {
            std::vector<std::string> cats;
            for (std::size_t r = 0; r < nrow; ++r) cats.push_back(rows[r + 1][c]);
            std::sort(cats.begin(), cats.end());
            cats.erase(std::unique(cats.begin(), cats.end()), cats.end());
            for (const std::string& cat : cats) {
                std::vector<double> ind(nrow, 0.0);
                for (std::size_t r = 0; r < nrow; ++r) {
                    if (rows[r + 1][c] == cat) ind[r] = 1.0;
                }
                cols.push_back(std::move(ind));
            }
        } else {
            std::fprintf(stderr, "note: dropping non-numeric column '%s'\n", header[c].c_str());
        }
    }
    if (cols.empty()) throw std::runtime_error(path + ": no usable feature columns");

    std::vector<int> ranks(nrow);
    int k = 0;
    if (!opts.bin_edges.empty()) {
        k = static_cast<int>(opts.bin_edges.size()) + 1;
        for (std::size_t r = 0; r < nrow; ++r) {
            auto it = std::lower_bound(opts.bin_edges.begin(), opts.bin_edges.end(), targets[r]);
            ranks[r] = static_cast<int>(it - opts.bin_edges.begin()) + 1;
        }
    } else if (opts.equal_width_bins >= 2) {
        k = opts.equal_width_bins;
        double lo = targets[0], hi = targets[0];
        for (double v : targets) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (lo == hi) {
            std::fprintf(stderr, "note: constant target; every row lands in bin 1\n");
            std::fill(ranks.begin(), ranks.end(), 1);
        } else {
            double width = (hi - lo) / static_cast<double>(k);
            for (std::size_t r = 0; r < nrow; ++r) {
                int b = 1 + static_cast<int>(std::floor((targets[r] - lo) / width));
                ranks[r] = std::min(std::max(b, 1), k);
            }
        }
    } else {
        for (std::size_t r = 0; r < nrow; ++r) {
            double rounded = std::round(targets[r]);
            if (std::fabs(targets[r] - rounded) > 1e-9 || rounded < 1.0) {
                throw std::runtime_error(path + ": target values are not integer ranks >= 1; supply bin edges or a bin count");
            }
            ranks[r] = static_cast<int>(rounded);
            k = std::max(k, ranks[r]);
        }
        if (k < 2) throw std::runtime_error(path + ": only one rank present; not an ordinal problem");
    }
    std::vector<std::size_t> bin_count(static_cast<std::size_t>(k) + 1, 0);
    for (int r : ranks) ++bin_count[static_cast<std::size_t>(r)];
    for (int b = 1; b <= k; ++b) {
        if (bin_count[static_cast<std::size_t>(b)] == 0) {
            std::fprintf(stderr, "note: bin %d is empty\n", b);
        }
    }

    if (opts.normalize) {
        for (std::vector<double>& col : cols) {
            double mean = 0.0;
            for (double v : col) mean += v;
            mean /= static_cast<double>(nrow);
            double var = 0.0;
            for (double v : col) var += (v - mean) * (v - mean);
            var /= static_cast<double>(nrow);
            double sd = std::sqrt(var);
            if (sd > 0.0) {
                for (double& v : col) v = (v - mean) / sd;
            } else {
                std::fill(col.begin(), col.end(), 0.0);
            }
        }
    }

    LabeledDataset ds;
    ds.k = k;
    ds.instances.assign(nrow, Vec(cols.size()));
    for (std::size_t r = 0; r < nrow; ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) ds.instances[r][c] = cols[c][r];
        ds.true_ranks.push_back(ranks[r]);
        ds.intervals.push_back(IntervalLabel{ranks[r], ranks[r]});
        ds.is_partial.push_back(0);
    }
    return ds;
}

void write_dataset_csv(const LabeledDataset& ds, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot write " + path);
    const int d = ds.dim();
    for (int j = 1; j <= d; ++j) std::fprintf(f, "x_%d,", j);
    std::fprintf(f, "y_true,y_lo,y_hi,is_partial\n");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (int j = 0; j < d; ++j) std::fprintf(f, "%.17g,", ds.instances[i][static_cast<std::size_t>(j)]);
        std::fprintf(f, "%d,%d,%d,%d\n", ds.true_ranks[i], ds.intervals[i].lo, ds.intervals[i].hi,
                     ds.is_partial[i]);
    }
    std::fclose(f);
}

LabeledDataset read_dataset_csv(const std::string& path, int k_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(split_line(line));
    }
    if (rows.size() < 2) throw std::runtime_error(path + ": need a header row and at least one data row");
    const std::vector<std::string>& header = rows[0];
    if (header.size() < 5 || header[header.size() - 4] != "y_true" ||
        header[header.size() - 3] != "y_lo" || header[header.size() - 2] != "y_hi" ||
        header[header.size() - 1] != "is_partial") {
        throw std::runtime_error(path + ": expected trailing columns y_true,y_lo,y_hi,is_partial");
    }
    const std::size_t d = header.size() - 4;
    LabeledDataset ds;
    int max_rank = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != header.size()) {
            throw std::runtime_error(path + ": row " + std::to_string(r + 1) + " has " +
                                     std::to_string(rows[r].size()) + " fields, expected " +
                                     std::to_string(header.size()));
        }
        Vec x(d);
        for (std::size_t j = 0; j < d; ++j) {
            if (!parse_finite(rows[r][j], x[j])) {
                throw std::runtime_error(path + ": bad feature value '" + rows[r][j] + "' at row " +
                                         std::to_string(r + 1));
            }
        }
        double yv, lov, hiv, pv;
        if (!parse_finite(rows[r][d], yv) || !parse_finite(rows[r][d + 1], lov) ||
            !parse_finite(rows[r][d + 2], hiv) || !parse_finite(rows[r][d + 3], pv)) {
            throw std::runtime_error(path + ": bad label fields at row " + std::to_string(r + 1));
        }
        ds.instances.push_back(std::move(x));
        ds.true_ranks.push_back(static_cast<int>(yv));
        ds.intervals.push_back(IntervalLabel{static_cast<int>(lov), static_cast<int>(hiv)});
        ds.is_partial.push_back(pv != 0.0 ? 1 : 0);
        max_rank = std::max(max_rank, std::max(static_cast<int>(yv), static_cast<int>(hiv)));
    }
    ds.k = k_override > 0 ? k_override : max_rank;
    if (ds.k < 2) throw std::runtime_error(path + ": fewer than 2 ranks");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        validate_label(ds.intervals[i], ds.k);
        validate_label(IntervalLabel{ds.true_ranks[i], ds.true_ranks[i]}, ds.k);
    }
    return ds;
}

}  // namespace pril
