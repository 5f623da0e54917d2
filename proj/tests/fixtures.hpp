// SPDX-License-Identifier: Apache-2.0
//
// Generated by tests/oracle/make_fixtures.py (mpmath, 40 digits). Do not edit.

#ifndef DYADCAP_TEST_FIXTURES_HPP
#define DYADCAP_TEST_FIXTURES_HPP

namespace fixtures
{
    inline constexpr double ln_gamma_7_5 = 7.534364236758733;
    inline constexpr double upper_gamma_m1_5_at_2 = 0.011832994103345997;
    inline constexpr double upper_gamma_0_5_at_1e_8 = 1.7722538509061827;
    inline constexpr double bessel_k1_at_0_2 = 4.7759725432204722;
    inline constexpr double bessel_k0_at_2 = 0.11389387274953344;
    inline constexpr double bessel_k_nearly1_at_1_5 = 0.27738765791990628;
    inline constexpr double bessel_k0_at_100_ratio = 0.9987569591071785;
    inline constexpr double envelope_pdf_m0_5_r0_5 = 0.70413065352859896;
    inline constexpr double dyadic_pdf_m1_at_1 = 0.22778774549906687;
    inline constexpr double dyadic_cdf_m1_at_0_01 = 0.04480549135590555;
    inline constexpr double dyadic_cdf_m0_5_at_0_01 = 0.21782865029748174;
    inline constexpr double single_power_m1_cutoff1 = 0.14849550677592205;
    inline constexpr double dyadic_power_m1_cutoff1 = 0.13502181349695672;
    inline constexpr double snr_of_scaled_cutoff_m1_mu25 = 1.4394782474964144e-6;
    inline constexpr double single_cutoff_m1_m30db = 3.8445995912952954;
    inline constexpr double single_capacity_m1_m30db_nats = 4.5649401372212316e-3;
    inline constexpr double dyadic_cutoff_m1_m30db = 6.0521822703433647;
    inline constexpr double dyadic_capacity_m1_m30db_nats = 8.0569343819781711e-3;
}

#endif
