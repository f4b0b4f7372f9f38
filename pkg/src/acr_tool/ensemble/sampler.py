"""
アンサンブル R_{n,m} からの行列サンプリング

標本 i ごとに SeedSequence(seed, spawn_key=(i,)) から Philox ストリームを
作るため、標本列は (seed, i) だけで決まり、並列分割の仕方に依存しない。
"""

import numpy as np

from acr_tool.gf2core.models import BitMatrix

from .models import EnsembleParams


def stream_generator(seed: int, index: int) -> np.random.Generator:
    """(seed, 標本番号) に対応する独立ストリーム"""
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,)))
    )


def sample_matrix(params: EnsembleParams, rng: np.random.Generator) -> BitMatrix:
    """nm 個のビットを独立一様に引いて H を作る"""
    bits = rng.integers(0, 2, size=(params.m, params.n), dtype=np.uint8)
    packed = np.packbits(bits, axis=1, bitorder="little")
    rows = tuple(int.from_bytes(row.tobytes(), "little") for row in packed)
    return BitMatrix(params.m, params.n, rows)


def sample_matrix_at(params: EnsembleParams, seed: int, index: int) -> BitMatrix:
    return sample_matrix(params, stream_generator(seed, index))
