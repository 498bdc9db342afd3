#ifndef CRDCACHE_ERRORS_HPP
#define CRDCACHE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crdcache {

enum class Errc {
    non_uniform_block_size,
    empty_block,
    point_out_of_range,
    duplicate_point_in_block,
    not_a_partition,
    class_not_disjoint,
    class_does_not_cover,
    index_out_of_range,
    out_of_range,
    invalid_params,
    access_degree_unsupported,
    z_out_of_range,
    demand_count_mismatch,
    file_index_out_of_range,
    invalid_memory_point,
    non_integer_result,
    parse_error,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace crdcache

#endif
