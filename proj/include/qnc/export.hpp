#pragma once

#include <ostream>
#include <span>

#include "json.hpp"
#include "qnc/complex.hpp"
#include "qnc/operator.hpp"
#include "qnc/spectral.hpp"

namespace qnc {

// "i,j,p_i,p_j,entry" with 1-based indices and full-precision decimals.
// Weighted matrices append an "entry_im" column.
void write_matrix_csv(std::ostream& out, const QncMatrix& m);

// {n, variant, precision_bits, tail_bound}; tail_bound is a decimal string
// or "divergent".
nlohmann::json matrix_sidecar(const QncMatrix& m);

// "j,lambda_j", j 1-based.
void write_spectrum_csv(std::ostream& out, const SpectrumResult& s);

// "re_w,im_w,re_det,im_det".
void write_determinant_csv(std::ostream& out, std::span<const Complex> ws,
                           std::span<const Complex> dets);

}  // namespace qnc
