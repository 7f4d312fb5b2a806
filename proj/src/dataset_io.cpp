#include "sensorfx/dataset_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include <fnmatch.h>
#include <jpeglib.h>
#include <png.h>

#include "sensorfx/error.hpp"

namespace sensorfx {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

/// Interleaved 8-bit RGB straight out of a decoder.
struct Decoded {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;
    std::vector<std::uint8_t*> rows;
    IoErrorKind error_kind = IoErrorKind::DecodeFailure;
    char message[JMSG_LENGTH_MAX] = {};
};

// The decoders below use setjmp/longjmp error recovery from the C libraries,
// so they keep every non-trivial object in the caller-owned Decoded.

void png_error_handler(png_structp png, png_const_charp msg) {
    auto* out = static_cast<Decoded*>(png_get_error_ptr(png));
    std::snprintf(out->message, sizeof(out->message), "%s", msg);
    png_longjmp(png, 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

bool decode_png(std::FILE* file, Decoded& out) {
    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, &out, png_error_handler, png_warning_handler);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        std::snprintf(out.message, sizeof(out.message), "out of memory");
        return false;
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        return false;
    }

    png_init_io(png, file);
    png_read_info(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);
    if (bit_depth > 8) {
        out.error_kind = IoErrorKind::UnsupportedFormat;
        std::snprintf(out.message, sizeof(out.message), "unsupported bit depth %d", bit_depth);
        png_destroy_read_struct(&png, &info, nullptr);
        return false;
    }
    if ((color_type & PNG_COLOR_MASK_ALPHA) != 0) {
        out.error_kind = IoErrorKind::UnsupportedFormat;
        std::snprintf(out.message, sizeof(out.message),
                      "unsupported channel count (image has an alpha channel)");
        png_destroy_read_struct(&png, &info, nullptr);
        return false;
    }
    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY) {
        if (bit_depth < 8) {
            png_set_expand_gray_1_2_4_to_8(png);
        }
        png_set_gray_to_rgb(png);
    }
    png_read_update_info(png, info);

    out.width = static_cast<int>(png_get_image_width(png, info));
    out.height = static_cast<int>(png_get_image_height(png, info));
    const std::size_t stride = png_get_rowbytes(png, info);
    if (stride != static_cast<std::size_t>(out.width) * 3) {
        out.error_kind = IoErrorKind::UnsupportedFormat;
        std::snprintf(out.message, sizeof(out.message), "unexpected PNG row layout");
        png_destroy_read_struct(&png, &info, nullptr);
        return false;
    }
    out.rgb.resize(stride * static_cast<std::size_t>(out.height));
    out.rows.resize(static_cast<std::size_t>(out.height));
    for (int y = 0; y < out.height; ++y) {
        out.rows[y] = out.rgb.data() + stride * static_cast<std::size_t>(y);
    }
    png_read_image(png, out.rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return true;
}

struct JpegError {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    Decoded* out;
};

void jpeg_error_handler(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegError*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->out->message);
    std::longjmp(err->jump, 1);
}

void jpeg_silent(j_common_ptr, int) {}

bool decode_jpeg(std::FILE* file, Decoded& out) {
    jpeg_decompress_struct cinfo{};
    JpegError err{};
    err.out = &out;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_handler;
    err.base.emit_message = jpeg_silent;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        return false;
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, file);
    jpeg_read_header(&cinfo, TRUE);
    if (cinfo.num_components != 1 && cinfo.num_components != 3) {
        out.error_kind = IoErrorKind::UnsupportedFormat;
        std::snprintf(out.message, sizeof(out.message), "unsupported channel count %d",
                      cinfo.num_components);
        jpeg_destroy_decompress(&cinfo);
        return false;
    }
    if (cinfo.data_precision != 8) {
        out.error_kind = IoErrorKind::UnsupportedFormat;
        std::snprintf(out.message, sizeof(out.message), "unsupported bit depth %d",
                      cinfo.data_precision);
        jpeg_destroy_decompress(&cinfo);
        return false;
    }
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    out.width = static_cast<int>(cinfo.output_width);
    out.height = static_cast<int>(cinfo.output_height);
    const std::size_t stride = static_cast<std::size_t>(out.width) * 3;
    out.rgb.resize(stride * static_cast<std::size_t>(out.height));
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = out.rgb.data() + stride * cinfo.output_scanline;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return true;
}

void png_write_error_handler(png_structp png, png_const_charp msg) {
    auto* message = static_cast<std::string*>(png_get_error_ptr(png));
    *message = msg;
    png_longjmp(png, 1);
}

bool encode_png(std::FILE* file, int width, int height, std::vector<std::uint8_t*>& rows,
                std::string& message) {
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &message,
                                              png_write_error_handler, png_warning_handler);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        return false;
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        return false;
    }
    png_init_io(png, file);
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return true;
}

bool matches_any(const std::string& name, const std::vector<std::string>& patterns) {
    return std::any_of(patterns.begin(), patterns.end(), [&](const std::string& p) {
        return fnmatch(p.c_str(), name.c_str(), 0) == 0;
    });
}

} // namespace

std::uint8_t quantize(float sample) noexcept {
    if (!(sample > 0.0f)) {
        return 0;
    }
    if (sample >= 255.0f) {
        return 255;
    }
    return static_cast<std::uint8_t>(std::lround(sample));
}

ImageBuffer quantized(const ImageBuffer& image) {
    ImageBuffer out = image;
    for (float& v : out.samples()) {
        v = quantize(v);
    }
    return out;
}

ImageBuffer load_image(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw IoError(IoErrorKind::NotFound, "image not found: " + path.string());
    }
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) {
        throw IoError(IoErrorKind::NotFound, "cannot open image: " + path.string());
    }

    std::array<unsigned char, 8> magic{};
    const std::size_t got = std::fread(magic.data(), 1, magic.size(), file.get());
    std::rewind(file.get());

    Decoded decoded;
    bool ok = false;
    if (got == magic.size() && png_sig_cmp(magic.data(), 0, magic.size()) == 0) {
        ok = decode_png(file.get(), decoded);
    } else if (got >= 3 && magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF) {
        ok = decode_jpeg(file.get(), decoded);
    } else {
        throw IoError(IoErrorKind::UnsupportedFormat,
                      "not a PNG or JPEG file: " + path.string());
    }
    if (!ok) {
        throw IoError(decoded.error_kind, path.string() + ": " + decoded.message);
    }
    if (decoded.width <= 0 || decoded.height <= 0) {
        throw IoError(IoErrorKind::DecodeFailure, path.string() + ": empty image");
    }

    ImageBuffer image(decoded.width, decoded.height);
    auto r = image.plane(Channel::Red);
    auto g = image.plane(Channel::Green);
    auto b = image.plane(Channel::Blue);
    for (std::size_t i = 0; i < image.pixel_count(); ++i) {
        r[i] = decoded.rgb[3 * i];
        g[i] = decoded.rgb[3 * i + 1];
        b[i] = decoded.rgb[3 * i + 2];
    }
    return image;
}

void save_image(const ImageBuffer& image, const fs::path& path) {
    if (image.empty()) {
        throw InvalidArgument("cannot save an empty image");
    }
    const int width = image.width();
    const int height = image.height();
    const std::size_t stride = static_cast<std::size_t>(width) * 3;
    std::vector<std::uint8_t> rgb(stride * static_cast<std::size_t>(height));
    const auto r = image.plane(Channel::Red);
    const auto g = image.plane(Channel::Green);
    const auto b = image.plane(Channel::Blue);
    for (std::size_t i = 0; i < image.pixel_count(); ++i) {
        rgb[3 * i] = quantize(r[i]);
        rgb[3 * i + 1] = quantize(g[i]);
        rgb[3 * i + 2] = quantize(b[i]);
    }
    std::vector<std::uint8_t*> rows(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) {
        rows[y] = rgb.data() + stride * static_cast<std::size_t>(y);
    }

    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) {
        throw IoError(IoErrorKind::WriteFailure, "cannot create " + path.string() + ": " +
                                                     std::strerror(errno));
    }
    std::string message;
    if (!encode_png(file.get(), width, height, rows, message)) {
        throw IoError(IoErrorKind::WriteFailure, path.string() + ": " + message);
    }
    if (std::fflush(file.get()) != 0) {
        throw IoError(IoErrorKind::WriteFailure, "write failed: " + path.string());
    }
}

LabelSet read_labels(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(IoErrorKind::NotFound, "label file not found: " + path.string());
    }
    std::ostringstream bytes;
    bytes << in.rdbuf();
    return LabelSet{bytes.str()};
}

void write_labels(const LabelSet& labels, const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(labels.bytes.data(), static_cast<std::streamsize>(labels.bytes.size()));
    if (!out) {
        throw IoError(IoErrorKind::WriteFailure, "cannot write labels " + path.string());
    }
}

std::vector<DatasetItem> enumerate_dataset(const fs::path& root,
                                           const std::vector<std::string>& patterns,
                                           const std::optional<fs::path>& labels_root) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError(IoErrorKind::NotFound, "dataset directory not found: " + root.string());
    }

    std::vector<DatasetItem> items;
    fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
    if (ec) {
        throw IoError(IoErrorKind::NotFound, "cannot read " + root.string() + ": " + ec.message());
    }
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) {
            throw IoError(IoErrorKind::NotFound,
                          "cannot read " + root.string() + ": " + ec.message());
        }
        if (!it->is_regular_file() || !matches_any(it->path().filename().string(), patterns)) {
            continue;
        }
        DatasetItem item;
        item.image_path = fs::relative(it->path(), root);
        item.stable_key = item.image_path.generic_string();
        if (labels_root) {
            fs::path label = item.image_path.parent_path() / item.image_path.stem();
            label += ".txt";
            if (fs::is_regular_file(*labels_root / label)) {
                item.label_path = label;
            }
        }
        items.push_back(std::move(item));
    }
    if (ec) {
        throw IoError(IoErrorKind::NotFound, "cannot read " + root.string() + ": " + ec.message());
    }

    std::sort(items.begin(), items.end(), [](const DatasetItem& a, const DatasetItem& b) {
        return a.stable_key < b.stable_key;
    });
    return items;
}

Json record_to_json(const AugmentationRecord& r) {
    Json j;
    j["source"] = r.source;
    j["output"] = r.output;
    j["aug_index"] = r.aug_index;
    j["seed"] = r.seed;
    j["params"] = params_to_json(r.params);
    return j;
}

AugmentationRecord record_from_json(const Json& j) {
    if (!j.is_object()) {
        throw InvalidArgument("manifest record must be a JSON object");
    }
    for (const char* key : {"source", "output", "aug_index", "seed", "params"}) {
        if (!j.contains(key)) {
            throw InvalidArgument(std::string("manifest record is missing '") + key + "'");
        }
    }
    try {
        AugmentationRecord r;
        r.source = j.at("source").get<std::string>();
        r.output = j.at("output").get<std::string>();
        r.aug_index = j.at("aug_index").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.params = params_from_json(j.at("params"));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed manifest record: ") + e.what());
    }
}

void write_manifest(const std::vector<AugmentationRecord>& records, const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError(IoErrorKind::WriteFailure, "cannot create manifest " + path.string());
    }
    for (const AugmentationRecord& r : records) {
        out << record_to_json(r).dump() << '\n';
    }
    out.flush();
    if (!out) {
        throw IoError(IoErrorKind::WriteFailure, "cannot write manifest " + path.string());
    }
}

std::vector<AugmentationRecord> read_manifest(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(IoErrorKind::NotFound, "manifest not found: " + path.string());
    }
    std::vector<AugmentationRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        records.push_back(record_from_json(parse_json(line, "manifest line")));
    }
    return records;
}

} // namespace sensorfx
