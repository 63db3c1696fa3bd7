#include "evotrans/image_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "evotrans/errors.hpp"

namespace evotrans {

namespace {

constexpr uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

// Decode-side allocation cap (268M pixels ~ 0.8 GB of RGB).
constexpr uint64_t kMaxPixels = uint64_t{1} << 28;

void put_u32be(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

uint32_t get_u32be(const uint8_t* p) {
    return (uint32_t{p[0]} << 24) | (uint32_t{p[1]} << 16) |
           (uint32_t{p[2]} << 8) | uint32_t{p[3]};
}

void append_chunk(std::vector<uint8_t>& out, const char type[4],
                  const std::vector<uint8_t>& data) {
    put_u32be(out, static_cast<uint32_t>(data.size()));
    const std::size_t type_at = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    const uint32_t crc = ::crc32(0, out.data() + type_at, static_cast<uInt>(4 + data.size()));
    put_u32be(out, crc);
}

// Raw scanlines (filter byte 0 per row) of an RGB8 image.
std::vector<uint8_t> filtered_scanlines(const Image& img) {
    const auto w = static_cast<std::size_t>(img.cols());
    const auto h = static_cast<std::size_t>(img.rows());
    std::vector<uint8_t> raw;
    raw.reserve(h * (1 + 3 * w));
    for (std::size_t y = 0; y < h; ++y) {
        raw.push_back(0);  // filter: None
        for (std::size_t x = 0; x < w; ++x) {
            const Pixel& p = img.at(static_cast<int32_t>(y), static_cast<int32_t>(x));
            raw.push_back(p.r);
            raw.push_back(p.g);
            raw.push_back(p.b);
        }
    }
    return raw;
}

// zlib stream of stored (type 00) deflate blocks. Fully deterministic: the
// bytes depend only on the input, not on any compressor implementation.
std::vector<uint8_t> zlib_stored(const std::vector<uint8_t>& data) {
    std::vector<uint8_t> out;
    out.reserve(data.size() + data.size() / 65535 * 5 + 16);
    out.push_back(0x78);  // 32K window, deflate
    out.push_back(0x01);  // no preset dict, fastest-compression hint
    std::size_t pos = 0;
    do {
        const std::size_t len = std::min<std::size_t>(data.size() - pos, 65535);
        const bool final = pos + len == data.size();
        out.push_back(final ? 1 : 0);
        out.push_back(static_cast<uint8_t>(len));
        out.push_back(static_cast<uint8_t>(len >> 8));
        out.push_back(static_cast<uint8_t>(~len));
        out.push_back(static_cast<uint8_t>(~len >> 8));
        out.insert(out.end(), data.begin() + pos, data.begin() + pos + len);
        pos += len;
    } while (pos < data.size());
    const uint32_t adler = ::adler32(1, data.data(), static_cast<uInt>(data.size()));
    put_u32be(out, adler);
    return out;
}

std::vector<uint8_t> ihdr_data(int32_t width, int32_t height) {
    std::vector<uint8_t> d;
    put_u32be(d, static_cast<uint32_t>(width));
    put_u32be(d, static_cast<uint32_t>(height));
    d.push_back(8);  // bit depth
    d.push_back(2);  // colour type: truecolour
    d.push_back(0);  // compression
    d.push_back(0);  // filter
    d.push_back(0);  // interlace
    return d;
}

std::vector<uint8_t> zlib_inflate(const uint8_t* data, std::size_t size,
                                  std::size_t expected, const std::string& origin) {
    std::vector<uint8_t> out(expected);
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    if (inflateInit(&zs) != Z_OK) throw IoError(origin + ": inflateInit failed");
    zs.next_in = const_cast<Bytef*>(data);
    zs.avail_in = static_cast<uInt>(size);
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = inflate(&zs, Z_FINISH);
    const auto produced = static_cast<std::size_t>(zs.total_out);
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != expected) {
        throw IoError(origin + ": corrupt compressed image data");
    }
    return out;
}

uint8_t paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a);
    const int pb = std::abs(p - b);
    const int pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return static_cast<uint8_t>(a);
    if (pb <= pc) return static_cast<uint8_t>(b);
    return static_cast<uint8_t>(c);
}

// Reverses PNG row filters in place over raw scanlines (filter byte + row).
void defilter(std::vector<uint8_t>& raw, std::size_t width, std::size_t height,
              std::size_t bpp, const std::string& origin) {
    const std::size_t stride = 1 + width * bpp;
    std::vector<uint8_t> zero(width * bpp, 0);
    const uint8_t* prior = zero.data();
    for (std::size_t y = 0; y < height; ++y) {
        uint8_t* row = raw.data() + y * stride;
        const uint8_t filter = row[0];
        uint8_t* cur = row + 1;
        const std::size_t n = width * bpp;
        switch (filter) {
            case 0:
                break;
            case 1:  // Sub
                for (std::size_t i = bpp; i < n; ++i) cur[i] += cur[i - bpp];
                break;
            case 2:  // Up
                for (std::size_t i = 0; i < n; ++i) cur[i] += prior[i];
                break;
            case 3:  // Average
                for (std::size_t i = 0; i < n; ++i) {
                    const int left = i >= bpp ? cur[i - bpp] : 0;
                    cur[i] += static_cast<uint8_t>((left + prior[i]) / 2);
                }
                break;
            case 4:  // Paeth
                for (std::size_t i = 0; i < n; ++i) {
                    const int left = i >= bpp ? cur[i - bpp] : 0;
                    const int upleft = i >= bpp ? prior[i - bpp] : 0;
                    cur[i] += paeth(left, prior[i], upleft);
                }
                break;
            default:
                throw IoError(origin + ": unknown PNG row filter " +
                              std::to_string(filter));
        }
        prior = cur;
    }
}

Image decode_png(const std::vector<uint8_t>& bytes, const std::string& origin) {
    if (bytes.size() < 8 + 25 || std::memcmp(bytes.data(), kPngSignature, 8) != 0) {
        throw IoError(origin + ": not a PNG file");
    }
    std::size_t pos = 8;
    bool saw_ihdr = false;
    uint32_t width = 0, height = 0;
    uint8_t depth = 0, color = 0, interlace = 0;
    std::vector<uint8_t> idat;
    while (pos + 12 <= bytes.size()) {
        const uint32_t len = get_u32be(&bytes[pos]);
        if (pos + 12 + len > bytes.size()) {
            throw IoError(origin + ": truncated PNG chunk");
        }
        const char* type = reinterpret_cast<const char*>(&bytes[pos + 4]);
        const uint8_t* data = &bytes[pos + 8];
        const uint32_t crc_stored = get_u32be(data + len);
        if (::crc32(0, &bytes[pos + 4], len + 4) != crc_stored) {
            throw IoError(origin + ": PNG chunk CRC mismatch");
        }
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw IoError(origin + ": malformed IHDR");
            width = get_u32be(data);
            height = get_u32be(data + 4);
            depth = data[8];
            color = data[9];
            interlace = data[12];
            saw_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            break;
        }
        pos += 12 + len;
    }
    if (!saw_ihdr) throw IoError(origin + ": missing IHDR");
    if (width == 0 || height == 0) {
        throw ConfigError(origin + ": zero-area image");
    }
    if (static_cast<uint64_t>(width) * height > kMaxPixels) {
        throw ConfigError(origin + ": image larger than the supported " +
                          std::to_string(kMaxPixels) + " pixels");
    }
    if (interlace != 0) {
        throw ConfigError(origin + ": interlaced PNG is not supported");
    }
    if (depth != 8) {
        throw ConfigError(origin + ": only 8-bit channels are supported, got " +
                          std::to_string(int{depth}) + "-bit");
    }
    if (color == 4 || color == 6) {
        throw ConfigError(origin + ": alpha-channel inputs are rejected");
    }
    if (color == 3) {
        throw ConfigError(origin + ": palette PNG is not supported");
    }
    if (color != 0 && color != 2) {
        throw ConfigError(origin + ": unsupported PNG colour type " +
                          std::to_string(int{color}));
    }
    const std::size_t bpp = color == 2 ? 3 : 1;
    const std::size_t expected = height * (1 + static_cast<std::size_t>(width) * bpp);
    auto raw = zlib_inflate(idat.data(), idat.size(), expected, origin);
    defilter(raw, width, height, bpp, origin);

    std::vector<Pixel> px(static_cast<std::size_t>(width) * height);
    const std::size_t stride = 1 + static_cast<std::size_t>(width) * bpp;
    for (std::size_t y = 0; y < height; ++y) {
        const uint8_t* row = raw.data() + y * stride + 1;
        for (std::size_t x = 0; x < width; ++x) {
            Pixel& p = px[y * width + x];
            if (bpp == 3) {
                p = {row[3 * x], row[3 * x + 1], row[3 * x + 2]};
            } else {
                p = {row[x], row[x], row[x]};  // grayscale promotion
            }
        }
    }
    return Image(static_cast<int32_t>(height), static_cast<int32_t>(width),
                 std::move(px));
}

// P6 (binary RGB) and P5 (binary gray, promoted). Header tokens may be
// separated by whitespace and '#' comments.
Image decode_pnm(const std::vector<uint8_t>& bytes, const std::string& origin) {
    std::size_t pos = 2;
    const bool gray = bytes[1] == '5';
    auto next_token = [&]() -> long {
        while (pos < bytes.size()) {
            const char c = static_cast<char>(bytes[pos]);
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
        long v = -1;
        while (pos < bytes.size() &&
               std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            if (v < 0) v = 0;
            v = v * 10 + (bytes[pos] - '0');
            ++pos;
        }
        if (v < 0) throw IoError(origin + ": malformed PNM header");
        return v;
    };
    const long width = next_token();
    const long height = next_token();
    const long maxval = next_token();
    if (width < 1 || height < 1) throw ConfigError(origin + ": zero-area image");
    if (static_cast<uint64_t>(width) * static_cast<uint64_t>(height) > kMaxPixels) {
        throw ConfigError(origin + ": image larger than the supported " +
                          std::to_string(kMaxPixels) + " pixels");
    }
    if (maxval != 255) {
        throw ConfigError(origin + ": only 8-bit PNM (maxval 255) is supported");
    }
    ++pos;  // the single whitespace after maxval
    const std::size_t bpp = gray ? 1 : 3;
    const std::size_t need = static_cast<std::size_t>(width) * height * bpp;
    if (pos + need > bytes.size()) throw IoError(origin + ": truncated PNM data");

    std::vector<Pixel> px(static_cast<std::size_t>(width) * height);
    const uint8_t* d = bytes.data() + pos;
    for (std::size_t i = 0; i < px.size(); ++i) {
        px[i] = gray ? Pixel{d[i], d[i], d[i]}
                     : Pixel{d[3 * i], d[3 * i + 1], d[3 * i + 2]};
    }
    return Image(static_cast<int32_t>(height), static_cast<int32_t>(width),
                 std::move(px));
}

void append_fctl(std::vector<uint8_t>& out, uint32_t seq, const Image& frame,
                 uint16_t delay_num, uint16_t delay_den) {
    std::vector<uint8_t> d;
    put_u32be(d, seq);
    put_u32be(d, static_cast<uint32_t>(frame.cols()));
    put_u32be(d, static_cast<uint32_t>(frame.rows()));
    put_u32be(d, 0);  // x offset
    put_u32be(d, 0);  // y offset
    d.push_back(static_cast<uint8_t>(delay_num >> 8));
    d.push_back(static_cast<uint8_t>(delay_num));
    d.push_back(static_cast<uint8_t>(delay_den >> 8));
    d.push_back(static_cast<uint8_t>(delay_den));
    d.push_back(0);  // dispose: none
    d.push_back(0);  // blend: source
    append_chunk(out, "fcTL", d);
}

}  // namespace

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed on " + path);
    return bytes;
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed on " + path);
}

Image decode_image_buffer(const std::vector<uint8_t>& bytes,
                          const std::string& origin) {
    if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0) {
        return decode_png(bytes, origin);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6')) {
        return decode_pnm(bytes, origin);
    }
    throw IoError(origin + ": unsupported image format (PNG, P6 PPM or P5 PGM)");
}

Image decode_image(const std::string& path) {
    return decode_image_buffer(read_file(path), path);
}

std::vector<uint8_t> encode_png(const Image& image) {
    std::vector<uint8_t> out(kPngSignature, kPngSignature + 8);
    append_chunk(out, "IHDR", ihdr_data(image.cols(), image.rows()));
    append_chunk(out, "IDAT", zlib_stored(filtered_scanlines(image)));
    append_chunk(out, "IEND", {});
    return out;
}

void write_png(const std::string& path, const Image& image) {
    write_file(path, encode_png(image));
}

std::vector<uint8_t> encode_apng(const std::vector<Image>& frames,
                                 uint16_t delay_num, uint16_t delay_den) {
    if (frames.empty()) throw ConfigError("animation needs at least one frame");
    const Dims dims = frames.front().dims();
    for (const Image& f : frames) {
        if (f.dims() != dims) {
            throw ConfigError("animation frames must share one size");
        }
    }

    std::vector<uint8_t> out(kPngSignature, kPngSignature + 8);
    append_chunk(out, "IHDR", ihdr_data(dims.cols, dims.rows));
    std::vector<uint8_t> actl;
    put_u32be(actl, static_cast<uint32_t>(frames.size()));
    put_u32be(actl, 0);  // loop forever
    append_chunk(out, "acTL", actl);

    uint32_t seq = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        append_fctl(out, seq++, frames[i], delay_num, delay_den);
        const auto z = zlib_stored(filtered_scanlines(frames[i]));
        if (i == 0) {
            append_chunk(out, "IDAT", z);
        } else {
            std::vector<uint8_t> fdat;
            put_u32be(fdat, seq++);
            fdat.insert(fdat.end(), z.begin(), z.end());
            append_chunk(out, "fdAT", fdat);
        }
    }
    append_chunk(out, "IEND", {});
    return out;
}

void write_apng(const std::string& path, const std::vector<Image>& frames,
                uint16_t delay_num, uint16_t delay_den) {
    write_file(path, encode_apng(frames, delay_num, delay_den));
}

}  // namespace evotrans
