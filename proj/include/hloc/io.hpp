#ifndef HLOC_IO_HPP
#define HLOC_IO_HPP

#include <string>

#include "hloc/tensor.hpp"

namespace hloc {

// Tensor file schema (JSON):
//   order:      integer >= 1
//   dim:        integer >= 1
//   format:     "dense" | "coords"
//   dense:      flat row-major array of dim^order reals (dense format)
//   entries:    [{"idx": [1-based index tuple], "val": real}, ...] (coords)
//   symmetrize: bool, default false; assigns each coordinate value to every
//               permutation of its index tuple. Conflicting assignments are a
//               hard error, never averaged. Unspecified coordinates are 0.
Tensor load_tensor(const std::string& path, std::size_t guard = Tensor::default_guard);
Tensor parse_tensor(const std::string& json_text, std::size_t guard = Tensor::default_guard);

std::string tensor_to_json(const Tensor& a, bool dense = true);
void save_tensor(const Tensor& a, const std::string& path, bool dense = true);

}  // namespace hloc

#endif
