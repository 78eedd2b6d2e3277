# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

from matmoment import api


def test_api():
    api_items = dir(api)

    items_to_test = (
        "AlphaOutOfRegionError",
        "BoundaryDegenerateError",
        "DegenerateProblemError",
        "EvalAtZeroError",
        "InconsistentInputsError",
        "InputError",
        "IntegrandSingularError",
        "KindMismatchError",
        "MomentError",
        "MomentFileError",
        "NonconvergenceError",
        "NotContractiveError",
        "NotHankelError",
        "NotHermitianError",
        "NotPositiveDefiniteError",
        "NotToeplitzError",
        "OutOfRegionError",
        "RestrictedClassError",
        "ShapeMismatchError",
        "SingularAtPointError",
        "SingularDenominatorError",
        "SingularMeasureError",
        "VerificationError",
        "GramPair",
        "MatrixMoments",
        "MomentKind",
        "ProblemDims",
        "ShiftStructure",
        "build_gram",
        "gram_from_matrix",
        "random_hankel_moments",
        "random_toeplitz_moments",
        "random_unstructured_gram",
        "reverse_gram",
        "Construction",
        "DeBrangesData",
        "DeBrangesPair",
        "N_alpha",
        "default_pair",
        "hankel_pair",
        "hankel_two_column_pair",
        "phi_E",
        "phi_E_quadrature",
        "second_kind",
        "toeplitz_pair",
        "toeplitz_pair_alpha",
        "z_alpha",
        "IdentityReport",
        "run_identity_suite",
        "Geometry",
        "MatrixPolynomial",
        "blaschke",
        "rho",
        "sharp",
        "CircleQuadrature",
        "LineQuadrature",
        "QuadratureResult",
        "EntropyReport",
        "SchurParameter",
        "SolutionFunction",
        "ThetaMatrix",
        "assemble_theta",
        "boundary_density",
        "chi_and_chi_infinity",
        "entropy_check",
        "lft_eval",
        "recover_hamburger_moments",
        "recover_trig_moments",
        "sample_schur",
        "signature_matrices",
    )

    for item in items_to_test:
        assert item in api_items

    for item in api_items:
        if not item.startswith("_"):
            assert item in items_to_test
