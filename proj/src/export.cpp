#include "qnc/export.hpp"

#include <string>

namespace qnc {

void write_matrix_csv(std::ostream& out, const QncMatrix& m) {
  out << "i,j,p_i,p_j,entry" << (m.is_complex() ? ",entry_im" : "") << "\n";
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      out << i + 1 << ',' << j + 1 << ',' << m.primes()[i] << ',' << m.primes()[j] << ','
          << m.re(i, j).to_string();
      if (m.is_complex()) out << ',' << m.im(i, j).to_string();
      out << '\n';
    }
  }
}

nlohmann::json matrix_sidecar(const QncMatrix& m) {
  nlohmann::json j;
  j["n"] = m.n();
  j["variant"] = std::string(to_string(m.kind()));
  j["precision_bits"] = m.precision();
  j["tail_bound"] = m.tail_bound().divergent ? std::string("divergent")
                                             : m.tail_bound().value.to_string();
  return j;
}

void write_spectrum_csv(std::ostream& out, const SpectrumResult& s) {
  out << "j,lambda_j\n";
  for (std::size_t j = 0; j < s.lambdas.size(); ++j) {
    out << j + 1 << ',' << s.lambdas[j].to_string() << '\n';
  }
}

void write_determinant_csv(std::ostream& out, std::span<const Complex> ws,
                           std::span<const Complex> dets) {
  out << "re_w,im_w,re_det,im_det\n";
  for (std::size_t k = 0; k < ws.size() && k < dets.size(); ++k) {
    out << ws[k].re.to_string() << ',' << ws[k].im.to_string() << ',' << dets[k].re.to_string()
        << ',' << dets[k].im.to_string() << '\n';
  }
}

}  // namespace qnc
