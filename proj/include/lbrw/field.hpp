#ifndef LBRW_FIELD_HPP
#define LBRW_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lbrw/geometry.hpp"

namespace lbrw {

// Integer occupation field on the torus (individuals per site).
struct CountField {
    std::int32_t side = 0;
    std::vector<std::uint16_t> counts;

    std::uint16_t at(Site s) const { return counts[site_index(s, side)]; }
    std::uint16_t& at(Site s) { return counts[site_index(s, side)]; }

    std::uint64_t total() const;
    bool extinct() const { return total() == 0; }
};

CountField zero_field(std::int32_t side);

// Immutable space-time occupation record: frames 0..generations-1, frame 0
// being the earliest recorded generation. Frame t+1 is one reproduction step
// after frame t. Safe to share read-only across tracer threads.
class FieldRecord {
  public:
    FieldRecord(std::int32_t side, std::int64_t origin_generation,
                std::vector<std::uint16_t> cells, std::int64_t generations,
                std::uint64_t master_seed, std::uint64_t stream_id,
                std::vector<double> frame_means);

    std::int32_t side() const { return side_; }
    std::int64_t generations() const { return generations_; }
    std::int64_t origin_generation() const { return origin_generation_; }
    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::span<const std::uint16_t> frame(std::int64_t t) const;
    std::uint16_t at(std::int64_t t, Site s) const { return frame(t)[site_index(s, side_)]; }

    // Per-frame mean density, filled in while the record was generated.
    const std::vector<double>& frame_means() const { return frame_means_; }

    std::uint64_t count_cells() const { return cells_.size(); }

  private:
    std::int32_t side_;
    std::int64_t origin_generation_;
    std::int64_t generations_;
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::vector<std::uint16_t> cells_;
    std::vector<double> frame_means_;
};

// Flat binary export: header (magic, version, side, generations,
// origin_generation, master_seed, stream_id), then row-major 16-bit counts
// per frame, little-endian.
void write_record(const FieldRecord& record, std::ostream& out);
void write_record_file(const FieldRecord& record, const std::string& path);
FieldRecord read_record(std::istream& in);
FieldRecord read_record_file(const std::string& path);

}  // namespace lbrw

#endif
