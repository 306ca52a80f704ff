#include "exmoves/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "exmoves/errors.hpp"

namespace exmoves::io {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, long line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError("expected integer, got '" + std::string(tok) + "'", line);
    return v;
}

std::uint64_t parse_uint(std::string_view tok, long line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError("expected unsigned integer, got '" + std::string(tok) + "'", line);
    return v;
}

double parse_double(std::string_view tok, long line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError("expected number, got '" + std::string(tok) + "'", line);
    return v;
}

int parse_bounded(std::string_view tok, long line, long long lo, long long hi,
                  const char* what) {
    const long long v = parse_int(tok, line);
    if (v < lo || v > hi)
        throw FormatError(std::string(what) + " out of range: " + std::string(tok), line);
    return static_cast<int>(v);
}

// Line-oriented reader that tracks 1-based line numbers for error messages.
class Reader {
public:
    explicit Reader(const std::filesystem::path& path) : path_(path), in_(path) {
        if (!in_)
            throw Error("cannot open '" + path.string() + "' for reading");
    }

    bool next(std::vector<std::string_view>& tokens) {
        if (!std::getline(in_, line_))
            return false;
        ++line_no_;
        tokens = split(line_);
        return true;
    }

    std::vector<std::string_view> require(const char* what) {
        std::vector<std::string_view> tokens;
        if (!next(tokens))
            throw FormatError(std::string("unexpected end of file, expected ") + what,
                              line_no_ + 1);
        return tokens;
    }

    long line_no() const { return line_no_; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ifstream in_;
    std::string line_;
    long line_no_ = 0;
};

class Writer {
public:
    explicit Writer(const std::filesystem::path& path) : out_(path, std::ios::trunc) {
        if (!out_)
            throw Error("cannot open '" + path.string() + "' for writing");
        out_.precision(17);
    }

    template <typename... Parts>
    void line(const Parts&... parts) {
        bool first = true;
        ((out_ << (first ? "" : " ") << parts, first = false), ...);
        out_ << '\n';
    }

    std::ofstream& stream() { return out_; }

    void close() {
        out_.flush();
        if (!out_)
            throw Error("write failed");
        out_.close();
    }

private:
    std::ofstream out_;
};

} // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

QuantizedVideo read_qpts(const std::filesystem::path& path) {
    Reader rd(path);

    auto head = rd.require("QPTS header");
    if (head.size() != 6 || head[0] != "QPTS")
        throw FormatError("expected 'QPTS <version> <R> <C> <T> <K>'", rd.line_no());
    if (parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("unknown QPTS version '" + std::string(head[1]) + "'", rd.line_no());
    Size3 dims;
    dims.r = parse_bounded(head[2], rd.line_no(), 1, 1 << 24, "R");
    dims.c = parse_bounded(head[3], rd.line_no(), 1, 1 << 24, "C");
    dims.t = parse_bounded(head[4], rd.line_no(), 1, 1 << 24, "T");
    const int channels = parse_bounded(head[5], rd.line_no(), 1, 1 << 16, "K");

    auto dict = rd.require("DICT line");
    if (dict.size() != static_cast<std::size_t>(channels) + 1 || dict[0] != "DICT")
        throw FormatError("expected 'DICT <d_1> ... <d_K>' with K=" + std::to_string(channels),
                          rd.line_no());
    std::vector<int> sizes(channels);
    for (int k = 0; k < channels; ++k)
        sizes[k] = parse_bounded(dict[k + 1], rd.line_no(), 1, 1 << 28, "codebook size");

    std::vector<QuantizedPoint> points;
    std::vector<std::string_view> tokens;
    while (rd.next(tokens)) {
        if (tokens.empty())
            continue;
        if (tokens.size() != 5)
            throw FormatError("expected '<r> <c> <t> <k> <codeword>'", rd.line_no());
        QuantizedPoint p;
        p.r = parse_bounded(tokens[0], rd.line_no(), 0, dims.r - 1, "r");
        p.c = parse_bounded(tokens[1], rd.line_no(), 0, dims.c - 1, "c");
        p.t = parse_bounded(tokens[2], rd.line_no(), 0, dims.t - 1, "t");
        p.channel = parse_bounded(tokens[3], rd.line_no(), 0, channels - 1, "channel");
        p.codeword = parse_bounded(tokens[4], rd.line_no(), 0, sizes[p.channel] - 1, "codeword");
        points.push_back(p);
    }
    return QuantizedVideo(dims, std::move(sizes), std::move(points), path.stem().string());
}

void write_qpts(const std::filesystem::path& path, const QuantizedVideo& video) {
    Writer wr(path);
    wr.line("QPTS", 1, video.dims().r, video.dims().c, video.dims().t, video.channels());
    auto& out = wr.stream();
    out << "DICT";
    for (int d : video.codebook_sizes())
        out << ' ' << d;
    out << '\n';
    for (const auto& p : video.points())
        out << p.r << ' ' << p.c << ' ' << p.t << ' ' << p.channel << ' ' << p.codeword << '\n';
    wr.close();
}

namespace {

ExMoveModel read_model_block(Reader& rd) {
    auto head = rd.require("EXMODEL header");
    if (head.size() != 2 || head[0] != "EXMODEL" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'EXMODEL 1'", rd.line_no());

    ExMoveModel model;

    auto id = rd.require("ID line");
    if (id.size() != 2 || id[0] != "ID")
        throw FormatError("expected 'ID <exemplar id>'", rd.line_no());
    model.exemplar_id = std::string(id[1]);

    auto dict = rd.require("DICT line");
    if (dict.size() < 2 || dict[0] != "DICT")
        throw FormatError("expected 'DICT <d_1> ... <d_K>'", rd.line_no());
    std::vector<int> sizes;
    for (std::size_t k = 1; k < dict.size(); ++k)
        sizes.push_back(parse_bounded(dict[k], rd.line_no(), 1, 1 << 28, "codebook size"));
    model.weights.resize(sizes.size());
    for (std::size_t k = 0; k < sizes.size(); ++k)
        model.weights[k].assign(static_cast<std::size_t>(sizes[k]), 0.0);

    auto extent = rd.require("EXTENT line");
    if (extent.size() != 4 || extent[0] != "EXTENT")
        throw FormatError("expected 'EXTENT <h> <w> <l>'", rd.line_no());
    model.exemplar_extent.r = parse_bounded(extent[1], rd.line_no(), 1, 1 << 24, "h");
    model.exemplar_extent.c = parse_bounded(extent[2], rd.line_no(), 1, 1 << 24, "w");
    model.exemplar_extent.t = parse_bounded(extent[3], rd.line_no(), 1, 1 << 24, "l");

    auto bias = rd.require("BIAS line");
    if (bias.size() != 2 || bias[0] != "BIAS")
        throw FormatError("expected 'BIAS <value>'", rd.line_no());
    model.bias = parse_double(bias[1], rd.line_no());

    auto platt = rd.require("PLATT line");
    if (platt.size() < 2 || platt[0] != "PLATT")
        throw FormatError("expected 'PLATT <alpha> <beta>' or 'PLATT none'", rd.line_no());
    if (platt.size() == 2 && platt[1] == "none") {
        model.platt.reset();
    } else if (platt.size() == 3) {
        model.platt = PlattParams{parse_double(platt[1], rd.line_no()),
                                  parse_double(platt[2], rd.line_no())};
    } else {
        throw FormatError("expected 'PLATT <alpha> <beta>' or 'PLATT none'", rd.line_no());
    }

    auto meta = rd.require("META line");
    if (meta.size() != 5 || meta[0] != "META")
        throw FormatError("expected 'META <iterations> <converged> <active_size> <seed>'",
                          rd.line_no());
    model.meta.iterations = parse_bounded(meta[1], rd.line_no(), 0, 1 << 30, "iterations");
    model.meta.converged = parse_bounded(meta[2], rd.line_no(), 0, 1, "converged") != 0;
    model.meta.active_set_size =
        static_cast<std::size_t>(parse_int(meta[3], rd.line_no()));
    model.meta.seed = parse_uint(meta[4], rd.line_no());

    auto whead = rd.require("WEIGHTS line");
    if (whead.size() != 2 || whead[0] != "WEIGHTS")
        throw FormatError("expected 'WEIGHTS <count>'", rd.line_no());
    const long long nnz = parse_int(whead[1], rd.line_no());
    for (long long i = 0; i < nnz; ++i) {
        auto tok = rd.require("weight line");
        if (tok.size() != 3)
            throw FormatError("expected '<channel> <index> <value>'", rd.line_no());
        const int k = parse_bounded(tok[0], rd.line_no(), 0,
                                    static_cast<long long>(sizes.size()) - 1, "channel");
        const int j = parse_bounded(tok[1], rd.line_no(), 0, sizes[k] - 1, "index");
        model.weights[k][j] = parse_double(tok[2], rd.line_no());
    }

    auto end = rd.require("END line");
    if (end.size() != 1 || end[0] != "END")
        throw FormatError("expected 'END'", rd.line_no());
    return model;
}

void write_model_block(Writer& wr, const ExMoveModel& model) {
    auto& out = wr.stream();
    wr.line("EXMODEL", 1);
    wr.line("ID", model.exemplar_id.empty() ? "unnamed" : model.exemplar_id);
    out << "DICT";
    for (const auto& w : model.weights)
        out << ' ' << w.size();
    out << '\n';
    wr.line("EXTENT", model.exemplar_extent.r, model.exemplar_extent.c, model.exemplar_extent.t);
    wr.line("BIAS", format_double(model.bias));
    if (model.platt)
        wr.line("PLATT", format_double(model.platt->alpha), format_double(model.platt->beta));
    else
        wr.line("PLATT", "none");
    wr.line("META", model.meta.iterations, model.meta.converged ? 1 : 0,
            model.meta.active_set_size, model.meta.seed);
    std::size_t nnz = 0;
    for (const auto& w : model.weights)
        for (double v : w)
            if (v != 0.0)
                ++nnz;
    wr.line("WEIGHTS", nnz);
    for (std::size_t k = 0; k < model.weights.size(); ++k)
        for (std::size_t j = 0; j < model.weights[k].size(); ++j)
            if (model.weights[k][j] != 0.0)
                out << k << ' ' << j << ' ' << format_double(model.weights[k][j]) << '\n';
    wr.line("END");
}

} // namespace

ExMoveModel read_model(const std::filesystem::path& path) {
    Reader rd(path);
    return read_model_block(rd);
}

void write_model(const std::filesystem::path& path, const ExMoveModel& model) {
    Writer wr(path);
    write_model_block(wr, model);
    wr.close();
}

ExmoveBank read_bank(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("EXBANK header");
    if (head.size() != 3 || head[0] != "EXBANK" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'EXBANK 1 <count>'", rd.line_no());
    const long long count = parse_int(head[2], rd.line_no());
    if (count < 0)
        throw FormatError("negative model count", rd.line_no());

    ExmoveBank bank;
    bank.id = path.stem().string();
    bank.models.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i)
        bank.models.push_back(read_model_block(rd));

    for (std::size_t i = 1; i < bank.models.size(); ++i)
        if (bank.models[i].codebook_sizes() != bank.models[0].codebook_sizes())
            throw IncompatibilityError("bank '" + path.string() + "': model '" +
                                       bank.models[i].exemplar_id +
                                       "' has a mismatched codebook layout");
    return bank;
}

void write_bank(const std::filesystem::path& path, const ExmoveBank& bank) {
    for (std::size_t i = 1; i < bank.models.size(); ++i)
        if (bank.models[i].codebook_sizes() != bank.models[0].codebook_sizes())
            throw IncompatibilityError("write_bank: mismatched codebook layouts");
    Writer wr(path);
    wr.line("EXBANK", 1, bank.models.size());
    for (const auto& model : bank.models)
        write_model_block(wr, model);
    wr.close();
}

namespace {

const char* origin_name(EntryOrigin origin) {
    switch (origin) {
    case EntryOrigin::exemplar: return "exemplar";
    case EntryOrigin::random_init: return "random";
    case EntryOrigin::mined_positive: return "mined_pos";
    case EntryOrigin::mined_negative: return "mined_neg";
    }
    return "unknown";
}

EntryOrigin origin_from(std::string_view name, long line) {
    if (name == "exemplar") return EntryOrigin::exemplar;
    if (name == "random") return EntryOrigin::random_init;
    if (name == "mined_pos") return EntryOrigin::mined_positive;
    if (name == "mined_neg") return EntryOrigin::mined_negative;
    throw FormatError("unknown entry origin '" + std::string(name) + "'", line);
}

} // namespace

void write_active_set(const std::filesystem::path& path, const ActiveSet& active,
                      const ExMoveModel& model) {
    Writer wr(path);
    wr.line("EXACTS", 1, active.size());
    auto& out = wr.stream();
    for (const auto& e : active.entries()) {
        const double score = model.raw_score_of(e.phi);
        out << e.label << ' ' << format_double(score) << ' ' << e.video_id << ' '
            << e.volume.origin.r << ' ' << e.volume.origin.c << ' ' << e.volume.origin.t << ' '
            << e.volume.extent.r << ' ' << e.volume.extent.c << ' ' << e.volume.extent.t << ' '
            << origin_name(e.origin) << '\n';
    }
    wr.close();
}

ActiveSetFile read_active_set(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("EXACTS header");
    if (head.size() != 3 || head[0] != "EXACTS" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'EXACTS 1 <count>'", rd.line_no());
    const long long count = parse_int(head[2], rd.line_no());

    ActiveSetFile file;
    for (long long i = 0; i < count; ++i) {
        auto tok = rd.require("active-set entry");
        if (tok.size() != 10)
            throw FormatError("expected '<label> <score> <video> <r> <c> <t> <h> <w> <l> <origin>'",
                              rd.line_no());
        ActiveEntry e;
        const long long label = parse_int(tok[0], rd.line_no());
        if (label != 1 && label != -1)
            throw FormatError("label must be +1 or -1", rd.line_no());
        e.label = static_cast<int>(label);
        const double score = parse_double(tok[1], rd.line_no());
        e.video_id = std::string(tok[2]);
        e.volume.origin.r = parse_bounded(tok[3], rd.line_no(), 0, 1 << 24, "r");
        e.volume.origin.c = parse_bounded(tok[4], rd.line_no(), 0, 1 << 24, "c");
        e.volume.origin.t = parse_bounded(tok[5], rd.line_no(), 0, 1 << 24, "t");
        e.volume.extent.r = parse_bounded(tok[6], rd.line_no(), 1, 1 << 24, "h");
        e.volume.extent.c = parse_bounded(tok[7], rd.line_no(), 1, 1 << 24, "w");
        e.volume.extent.t = parse_bounded(tok[8], rd.line_no(), 1, 1 << 24, "l");
        e.origin = origin_from(tok[9], rd.line_no());
        file.labels.push_back(e.label);
        file.scores.push_back(score);
        file.entries.push_back(std::move(e));
    }
    return file;
}

DescriptorFile read_descriptors(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("EXDESC header");
    if (head.size() != 5 || head[0] != "EXDESC" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'EXDESC 1 <N_a> <N_s> <N_p>'", rd.line_no());

    DescriptorFile file;
    file.layout.n_exemplars = static_cast<std::size_t>(parse_int(head[2], rd.line_no()));
    file.layout.n_scales = static_cast<std::size_t>(parse_int(head[3], rd.line_no()));
    file.layout.n_cells = static_cast<std::size_t>(parse_int(head[4], rd.line_no()));
    const std::size_t dim = file.layout.dimension();
    if (dim == 0)
        throw FormatError("degenerate descriptor layout", rd.line_no());

    std::vector<std::string_view> tok;
    while (rd.next(tok)) {
        if (tok.empty())
            continue;
        if (tok.size() != dim + 1)
            throw FormatError("descriptor row has " + std::to_string(tok.size() - 1) +
                                  " values, layout requires " + std::to_string(dim),
                              rd.line_no());
        file.video_ids.emplace_back(tok[0]);
        std::vector<double> row(dim);
        for (std::size_t d = 0; d < dim; ++d)
            row[d] = parse_double(tok[d + 1], rd.line_no());
        file.rows.push_back(std::move(row));
    }
    return file;
}

void write_descriptors(const std::filesystem::path& path, const BankLayout& layout,
                       const std::vector<std::string>& video_ids,
                       const std::vector<std::vector<double>>& rows) {
    if (video_ids.size() != rows.size())
        throw ContractError("write_descriptors: ids/rows size mismatch");
    Writer wr(path);
    wr.line("EXDESC", 1, layout.n_exemplars, layout.n_scales, layout.n_cells);
    auto& out = wr.stream();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != layout.dimension())
            throw IncompatibilityError("write_descriptors: row length does not match layout");
        out << video_ids[i];
        for (double v : rows[i])
            out << ' ' << format_double(v);
        out << '\n';
    }
    wr.close();
}

std::vector<std::pair<std::string, std::string>> read_labels(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("LABELS header");
    if (head.size() != 2 || head[0] != "LABELS" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'LABELS 1'", rd.line_no());
    std::vector<std::pair<std::string, std::string>> out;
    std::vector<std::string_view> tok;
    while (rd.next(tok)) {
        if (tok.empty())
            continue;
        if (tok.size() != 2)
            throw FormatError("expected '<video-id> <class>'", rd.line_no());
        out.emplace_back(std::string(tok[0]), std::string(tok[1]));
    }
    return out;
}

void write_labels(const std::filesystem::path& path,
                  const std::vector<std::pair<std::string, std::string>>& labels) {
    Writer wr(path);
    wr.line("LABELS", 1);
    for (const auto& [id, cls] : labels)
        wr.line(id, cls);
    wr.close();
}

std::vector<ExemplarAnnotation> read_annotations(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("EXANNO header");
    if (head.size() != 2 || head[0] != "EXANNO" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'EXANNO 1'", rd.line_no());
    std::vector<ExemplarAnnotation> out;
    std::vector<std::string_view> tok;
    while (rd.next(tok)) {
        if (tok.empty())
            continue;
        if (tok.size() != 9)
            throw FormatError(
                "expected '<exemplar-id> <video-id> <class> <r> <c> <t> <h> <w> <l>'",
                rd.line_no());
        ExemplarAnnotation a;
        a.exemplar_id = std::string(tok[0]);
        a.video_id = std::string(tok[1]);
        a.action_class = std::string(tok[2]);
        a.volume.origin.r = parse_bounded(tok[3], rd.line_no(), 0, 1 << 24, "r");
        a.volume.origin.c = parse_bounded(tok[4], rd.line_no(), 0, 1 << 24, "c");
        a.volume.origin.t = parse_bounded(tok[5], rd.line_no(), 0, 1 << 24, "t");
        a.volume.extent.r = parse_bounded(tok[6], rd.line_no(), 1, 1 << 24, "h");
        a.volume.extent.c = parse_bounded(tok[7], rd.line_no(), 1, 1 << 24, "w");
        a.volume.extent.t = parse_bounded(tok[8], rd.line_no(), 1, 1 << 24, "l");
        out.push_back(std::move(a));
    }
    return out;
}

void write_annotations(const std::filesystem::path& path,
                       const std::vector<ExemplarAnnotation>& annotations) {
    Writer wr(path);
    wr.line("EXANNO", 1);
    for (const auto& a : annotations)
        wr.line(a.exemplar_id, a.video_id, a.action_class, a.volume.origin.r, a.volume.origin.c,
                a.volume.origin.t, a.volume.extent.r, a.volume.extent.c, a.volume.extent.t);
    wr.close();
}

std::vector<std::string> read_id_list(const std::filesystem::path& path) {
    Reader rd(path);
    std::vector<std::string> out;
    std::vector<std::string_view> tok;
    while (rd.next(tok)) {
        if (tok.empty())
            continue;
        if (tok.size() != 1)
            throw FormatError("expected one id per line", rd.line_no());
        out.emplace_back(tok[0]);
    }
    return out;
}

void write_id_list(const std::filesystem::path& path, const std::vector<std::string>& ids) {
    Writer wr(path);
    for (const auto& id : ids)
        wr.line(id);
    wr.close();
}

Codebook read_codebook(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("EXCB header");
    if (head.size() != 7 || head[0] != "EXCB" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'EXCB 1 <channel> <dim> <count> <seed> <iters>'",
                          rd.line_no());
    Codebook cb;
    cb.channel = parse_bounded(head[2], rd.line_no(), 0, 1 << 16, "channel");
    cb.dimension = parse_bounded(head[3], rd.line_no(), 1, 1 << 24, "dimension");
    const long long count = parse_int(head[4], rd.line_no());
    cb.seed = parse_uint(head[5], rd.line_no());
    cb.iterations = parse_bounded(head[6], rd.line_no(), 0, 1 << 30, "iterations");
    for (long long i = 0; i < count; ++i) {
        auto tok = rd.require("centroid line");
        if (tok.size() != static_cast<std::size_t>(cb.dimension))
            throw FormatError("centroid has " + std::to_string(tok.size()) +
                                  " values, expected " + std::to_string(cb.dimension),
                              rd.line_no());
        std::vector<double> v(cb.dimension);
        for (int d = 0; d < cb.dimension; ++d)
            v[static_cast<std::size_t>(d)] = parse_double(tok[static_cast<std::size_t>(d)],
                                                          rd.line_no());
        cb.centroids.push_back(std::move(v));
    }
    return cb;
}

void write_codebook(const std::filesystem::path& path, const Codebook& codebook) {
    Writer wr(path);
    wr.line("EXCB", 1, codebook.channel, codebook.dimension, codebook.centroids.size(),
            codebook.seed, codebook.iterations);
    auto& out = wr.stream();
    for (const auto& v : codebook.centroids) {
        for (std::size_t d = 0; d < v.size(); ++d)
            out << (d ? " " : "") << format_double(v[d]);
        out << '\n';
    }
    wr.close();
}

RawPoints read_raw_points(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("RPTS header");
    if (head.size() != 6 || head[0] != "RPTS" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'RPTS 1 <R> <C> <T> <K>'", rd.line_no());
    RawPoints raw;
    raw.dims.r = parse_bounded(head[2], rd.line_no(), 1, 1 << 24, "R");
    raw.dims.c = parse_bounded(head[3], rd.line_no(), 1, 1 << 24, "C");
    raw.dims.t = parse_bounded(head[4], rd.line_no(), 1, 1 << 24, "T");
    const int channels = parse_bounded(head[5], rd.line_no(), 1, 1 << 16, "K");

    auto vdim = rd.require("VDIM line");
    if (vdim.size() != static_cast<std::size_t>(channels) + 1 || vdim[0] != "VDIM")
        throw FormatError("expected 'VDIM <dim_1> ... <dim_K>'", rd.line_no());
    for (int k = 0; k < channels; ++k)
        raw.vector_dims.push_back(parse_bounded(vdim[k + 1], rd.line_no(), 1, 1 << 24, "dim"));

    std::vector<std::string_view> tok;
    while (rd.next(tok)) {
        if (tok.empty())
            continue;
        if (tok.size() < 5)
            throw FormatError("expected '<r> <c> <t> <k> <x_1> ...'", rd.line_no());
        RawPoints::Point p;
        // upstream extractors may emit sub-voxel coordinates; floor to voxels
        const double fr = parse_double(tok[0], rd.line_no());
        const double fc = parse_double(tok[1], rd.line_no());
        const double ft = parse_double(tok[2], rd.line_no());
        p.r = static_cast<int>(std::floor(fr));
        p.c = static_cast<int>(std::floor(fc));
        p.t = static_cast<int>(std::floor(ft));
        if (p.r < 0 || p.r >= raw.dims.r || p.c < 0 || p.c >= raw.dims.c || p.t < 0 ||
            p.t >= raw.dims.t)
            throw FormatError("point coordinates outside the video grid", rd.line_no());
        p.channel = parse_bounded(tok[3], rd.line_no(), 0, channels - 1, "channel");
        const std::size_t dim = static_cast<std::size_t>(raw.vector_dims[p.channel]);
        if (tok.size() != 4 + dim)
            throw FormatError("point vector has " + std::to_string(tok.size() - 4) +
                                  " values, channel requires " + std::to_string(dim),
                              rd.line_no());
        p.vector.resize(dim);
        for (std::size_t d = 0; d < dim; ++d)
            p.vector[d] = parse_double(tok[4 + d], rd.line_no());
        raw.points.push_back(std::move(p));
    }
    return raw;
}

ActionClassifierBank read_classifier(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("EXCLS header");
    if (head.size() != 5 || head[0] != "EXCLS" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'EXCLS 1 <K> <dim> <C>'", rd.line_no());
    const long long k = parse_int(head[2], rd.line_no());
    const long long dim = parse_int(head[3], rd.line_no());
    if (k < 1 || dim < 1)
        throw FormatError("degenerate classifier header", rd.line_no());

    ActionClassifierBank bank;
    bank.c = parse_double(head[4], rd.line_no());
    std::vector<std::string_view> cls = rd.require("CV or CLASS line");
    if (!cls.empty() && cls[0] == "CV") {
        // CV <folds> <n> <c_1> <acc_1> ... <c_n> <acc_n>
        if (cls.size() < 3)
            throw FormatError("expected 'CV <folds> <n> ...'", rd.line_no());
        bank.cv.folds = parse_bounded(cls[1], rd.line_no(), 2, 1 << 20, "folds");
        const long long n = parse_int(cls[2], rd.line_no());
        if (cls.size() != static_cast<std::size_t>(3 + 2 * n))
            throw FormatError("CV line has wrong arity", rd.line_no());
        for (long long i = 0; i < n; ++i) {
            bank.cv.grid.push_back(parse_double(cls[3 + 2 * i], rd.line_no()));
            bank.cv.accuracy.push_back(parse_double(cls[4 + 2 * i], rd.line_no()));
        }
        bank.cv.chosen_c = bank.c;
        cls = rd.require("CLASS line");
    }
    for (long long i = 0; i < k; ++i) {
        if (i > 0)
            cls = rd.require("CLASS line");
        if (cls.size() != 3 || cls[0] != "CLASS")
            throw FormatError("expected 'CLASS <label> <bias>'", rd.line_no());
        bank.classes.emplace_back(cls[1]);
        bank.biases.push_back(parse_double(cls[2], rd.line_no()));
        auto wline = rd.require("weight line");
        if (wline.size() != static_cast<std::size_t>(dim))
            throw FormatError("weight row has " + std::to_string(wline.size()) +
                                  " values, expected " + std::to_string(dim),
                              rd.line_no());
        std::vector<double> w(static_cast<std::size_t>(dim));
        for (long long d = 0; d < dim; ++d)
            w[static_cast<std::size_t>(d)] =
                parse_double(wline[static_cast<std::size_t>(d)], rd.line_no());
        bank.weights.push_back(std::move(w));
    }
    return bank;
}

void write_classifier(const std::filesystem::path& path, const ActionClassifierBank& bank) {
    if (bank.classes.empty())
        throw ContractError("write_classifier: empty bank");
    Writer wr(path);
    wr.line("EXCLS", 1, bank.classes.size(), bank.dimension(), format_double(bank.c));
    auto& out = wr.stream();
    if (!bank.cv.grid.empty()) {
        out << "CV " << bank.cv.folds << ' ' << bank.cv.grid.size();
        for (std::size_t i = 0; i < bank.cv.grid.size(); ++i)
            out << ' ' << format_double(bank.cv.grid[i]) << ' '
                << format_double(bank.cv.accuracy[i]);
        out << '\n';
    }
    for (std::size_t kix = 0; kix < bank.classes.size(); ++kix) {
        wr.line("CLASS", bank.classes[kix], format_double(bank.biases[kix]));
        const auto& w = bank.weights[kix];
        for (std::size_t d = 0; d < w.size(); ++d)
            out << (d ? " " : "") << format_double(w[d]);
        out << '\n';
    }
    wr.close();
}

void write_predictions(const std::filesystem::path& path,
                       const std::vector<std::string>& classes,
                       const std::vector<PredictionRow>& rows) {
    Writer wr(path);
    wr.line("PRED", 1, classes.size());
    auto& out = wr.stream();
    out << "CLASSES";
    for (const auto& c : classes)
        out << ' ' << c;
    out << '\n';
    for (const auto& row : rows) {
        out << row.video_id << ' ' << row.predicted_class;
        for (double s : row.scores)
            out << ' ' << format_double(s);
        out << '\n';
    }
    wr.close();
}

std::vector<PredictionRow> read_predictions(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("PRED header");
    if (head.size() != 3 || head[0] != "PRED" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'PRED 1 <K>'", rd.line_no());
    const long long k = parse_int(head[2], rd.line_no());
    auto classes = rd.require("CLASSES line");
    if (classes.size() != static_cast<std::size_t>(k) + 1 || classes[0] != "CLASSES")
        throw FormatError("expected 'CLASSES <c_1> ... <c_K>'", rd.line_no());

    std::vector<PredictionRow> rows;
    std::vector<std::string_view> tok;
    while (rd.next(tok)) {
        if (tok.empty())
            continue;
        if (tok.size() != static_cast<std::size_t>(k) + 2)
            throw FormatError("expected '<video-id> <class> <s_1> ... <s_K>'", rd.line_no());
        PredictionRow row;
        row.video_id = std::string(tok[0]);
        row.predicted_class = std::string(tok[1]);
        for (long long i = 0; i < k; ++i)
            row.scores.push_back(parse_double(tok[static_cast<std::size_t>(i) + 2], rd.line_no()));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_rfe_trace(const std::filesystem::path& path, const RfeTrace& trace) {
    Writer wr(path);
    wr.line("RFETRACE", 1, trace.elimination_order.size());
    if (!trace.accuracy_curve.empty())
        wr.line("FULL", format_double(trace.accuracy_curve[0]));
    else
        wr.line("FULL", format_double(0.0));
    for (std::size_t i = 0; i < trace.elimination_order.size(); ++i) {
        const double acc =
            i + 1 < trace.accuracy_curve.size() ? trace.accuracy_curve[i + 1] : 0.0;
        wr.line(i + 1, trace.elimination_order[i], format_double(acc));
    }
    auto& out = wr.stream();
    out << "SURVIVORS";
    for (const auto& id : trace.survivors)
        out << ' ' << id;
    out << '\n';
    wr.close();
}

RfeTrace read_rfe_trace(const std::filesystem::path& path) {
    Reader rd(path);
    auto head = rd.require("RFETRACE header");
    if (head.size() != 3 || head[0] != "RFETRACE" || parse_int(head[1], rd.line_no()) != 1)
        throw FormatError("expected 'RFETRACE 1 <steps>'", rd.line_no());
    const long long steps = parse_int(head[2], rd.line_no());

    RfeTrace trace;
    auto full = rd.require("FULL line");
    if (full.size() != 2 || full[0] != "FULL")
        throw FormatError("expected 'FULL <accuracy>'", rd.line_no());
    trace.accuracy_curve.push_back(parse_double(full[1], rd.line_no()));

    for (long long i = 0; i < steps; ++i) {
        auto tok = rd.require("elimination line");
        if (tok.size() != 3)
            throw FormatError("expected '<step> <exemplar-id> <accuracy>'", rd.line_no());
        trace.elimination_order.emplace_back(tok[1]);
        trace.accuracy_curve.push_back(parse_double(tok[2], rd.line_no()));
    }
    auto surv = rd.require("SURVIVORS line");
    if (surv.empty() || surv[0] != "SURVIVORS")
        throw FormatError("expected 'SURVIVORS ...'", rd.line_no());
    for (std::size_t i = 1; i < surv.size(); ++i)
        trace.survivors.emplace_back(surv[i]);
    return trace;
}

} // namespace exmoves::io
