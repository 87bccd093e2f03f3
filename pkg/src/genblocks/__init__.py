"""Exact computation of generalized ell-blocks for symmetric groups, wreath
products, and the normalizers of their ell-Sylow analogues."""

from .chartable import (BlockPartition, CharacterTable, ConsistencyError,
                        block_partition, check_orthogonality, contribution,
                        contribution_matrix)
from .cyclotomic import Cyclotomic, NotRationalError, root_of_unity
from .isometry import (IsometryReport, calibrate_quotient_pairing,
                       check_normalizer_wreath_blocks, product_group_blocks,
                       sylow_ell_structure, verify_kor_isometry,
                       verify_main_isometry)
from .normalizer import (CliffordLabel, build_normalizer, clifford_irr,
                         cyclic_group_data, normalizer_blocks,
                         normalizer_group_data, orbit_partition)
from .numtheory import divisors, euler_phi, mobius, ramanujan_sum
from .partitions import (beta_set, conjugate, ell_core_quotient,
                         enumerate_multipartitions, enumerate_partitions,
                         from_core_quotient, hook_data, k_hook_removals,
                         partition_from_beta)
from .symgroup import (is_ell_regular_class, mn_char_value, sn_blocks,
                       sn_character_table)
from .wreath import (WreathGroup, brute_force_wreath_oracle, chi0_value,
                     cyclic_wreath, cycle_product, eta_sign,
                     explicit_cyclic, explicit_normalizer, normalizer_wreath,
                     star_transform)

__version__ = "0.1.0"
