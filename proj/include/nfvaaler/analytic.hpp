#ifndef NFV_ANALYTIC_HPP
#define NFV_ANALYTIC_HPP

#include <optional>

#include "nfvaaler/ideal.hpp"
#include "nfvaaler/kernels.hpp"

namespace nfv {

constexpr double kEulerGamma = 0.5772156649015328606;

struct MertensReport {
    double X = 0;
    double value = 0;
    double model = 0;
    double residual = 0;
    std::optional<double> b_k_estimate;
    std::optional<double> alpha_estimate;
};

// sum over Nm(p) < X of log(Nm(p))/Nm(p); model log X
MertensReport mertens_log_sum(const NumberField& field, double X,
                              Exec mode = Exec::block_parallel);

// sum over Nm(p) <= X of 1/Nm(p); model log log X, residual = B_K estimate
MertensReport mertens_recip_sum(const NumberField& field, double X,
                                Exec mode = Exec::block_parallel);

// prod over Nm(p) <= X of (1 - 1/Nm(p))^-1; alpha estimate value/(e^gamma log X)
MertensReport mertens_product(const NumberField& field, double X,
                              Exec mode = Exec::block_parallel);

struct IdealCountReport {
    Int count;
    double alpha_estimate = 0;
};

// #{a : Nm(a) <= X} and the density estimate count/X.
IdealCountReport ideal_count_residue(PrimeFactory& factory, double X);

} // namespace nfv

#endif
