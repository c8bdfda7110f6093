#include "fg/planar_code.hpp"

#include <cstring>
#include <fstream>

namespace fg {

namespace {

constexpr char kHeader[] = ">>planar_code<<";
constexpr std::size_t kHeaderLen = 15;

class ByteReader {
public:
    explicit ByteReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    bool eof() const { return pos_ >= bytes_.size(); }

    std::uint8_t u8() {
        if (eof()) raise(Err::TruncatedRecord, "unexpected end of stream");
        return bytes_[pos_++];
    }

    std::uint16_t u16le() {
        std::uint16_t lo = u8();
        std::uint16_t hi = u8();
        return static_cast<std::uint16_t>(lo | (hi << 8));
    }

    bool starts_with(const char* s, std::size_t len) const {
        return bytes_.size() - pos_ >= len && std::memcmp(bytes_.data() + pos_, s, len) == 0;
    }

    void skip(std::size_t k) { pos_ += k; }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<CubicPlanarGraph> read_planar_code(const std::vector<std::uint8_t>& bytes) {
    ByteReader in(bytes);
    if (!in.eof() && bytes[0] == '>') {
        if (!in.starts_with(kHeader, kHeaderLen))
            raise(Err::BadHeader, "stream starts with '>' but not with \">>planar_code<<\"");
        in.skip(kHeaderLen);
    }

    std::vector<CubicPlanarGraph> graphs;
    while (!in.eof()) {
        bool wide = false;
        std::uint32_t n = in.u8();
        if (n == 0) { // 16-bit record
            wide = true;
            n = in.u16le();
        }
        if (n == 0) raise(Err::TruncatedRecord, "record with n = 0");

        std::vector<std::vector<int>> rot(n);
        for (std::uint32_t v = 0; v < n; ++v) {
            for (;;) {
                std::uint32_t w = wide ? in.u16le() : in.u8();
                if (w == 0) break;
                if (w > n)
                    raise(Err::VertexIdOutOfRange, "neighbor " + std::to_string(w) +
                                                       " in a graph on " + std::to_string(n) +
                                                       " vertices");
                rot[v].push_back(static_cast<int>(w - 1));
            }
        }
        graphs.push_back(build_graph(rot));
    }
    return graphs;
}

std::vector<std::uint8_t> write_planar_code(const std::vector<CubicPlanarGraph>& graphs) {
    std::vector<std::uint8_t> out(kHeader, kHeader + kHeaderLen);
    for (const CubicPlanarGraph& g : graphs) {
        const int n = g.vertex_count();
        if (n > 0xFFFF)
            raise(Err::VertexIdOutOfRange,
                  "graph on " + std::to_string(n) + " vertices does not fit planar_code");
        const bool wide = n > 0xFF;
        auto put = [&](std::uint32_t x) {
            if (wide) {
                out.push_back(static_cast<std::uint8_t>(x & 0xFF));
                out.push_back(static_cast<std::uint8_t>(x >> 8));
            } else {
                out.push_back(static_cast<std::uint8_t>(x));
            }
        };
        if (wide) out.push_back(0);
        put(static_cast<std::uint32_t>(n));
        for (int v = 0; v < n; ++v) {
            for (int w : g.rotation(v)) put(static_cast<std::uint32_t>(w + 1));
            put(0);
        }
    }
    return out;
}

std::vector<CubicPlanarGraph> read_planar_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Err::IoError, "cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_planar_code(bytes);
}

void write_planar_code_file(const std::string& path, const std::vector<CubicPlanarGraph>& graphs) {
    std::vector<std::uint8_t> bytes = write_planar_code(graphs);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Err::IoError, "cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(Err::IoError, "short write to " + path);
}

} // namespace fg
