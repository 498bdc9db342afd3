#include "crdcache/errors.hpp"

namespace crdcache {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::non_uniform_block_size: return "non_uniform_block_size";
    case Errc::empty_block: return "empty_block";
    case Errc::point_out_of_range: return "point_out_of_range";
    case Errc::duplicate_point_in_block: return "duplicate_point_in_block";
    case Errc::not_a_partition: return "not_a_partition";
    case Errc::class_not_disjoint: return "class_not_disjoint";
    case Errc::class_does_not_cover: return "class_does_not_cover";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::out_of_range: return "out_of_range";
    case Errc::invalid_params: return "invalid_params";
    case Errc::access_degree_unsupported: return "access_degree_unsupported";
    case Errc::z_out_of_range: return "z_out_of_range";
    case Errc::demand_count_mismatch: return "demand_count_mismatch";
    case Errc::file_index_out_of_range: return "file_index_out_of_range";
    case Errc::invalid_memory_point: return "invalid_memory_point";
    case Errc::non_integer_result: return "non_integer_result";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
    }
    return "unknown_error";
}

} // namespace crdcache
