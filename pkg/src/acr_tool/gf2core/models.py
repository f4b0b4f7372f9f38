"""
GF(2) 線形代数のデータモデル

ビット列は Python の int に詰めて保持する (bit j = 成分 j)。
テキスト表現では左端の文字が成分 0 に対応する。
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from acr_tool.errors.exceptions import LengthMismatch, MatrixFormatError, OutOfDomain


def _bits_from_string(text: str) -> int:
    """'0'/'1' の文字列を int に詰める (左端が bit 0)"""
    bits = 0
    for j, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << j
        elif ch != "0":
            raise MatrixFormatError(f"0/1 以外の文字が含まれています: {text!r}")
    return bits


def _bits_to_string(bits: int, length: int) -> str:
    return "".join("1" if (bits >> j) & 1 else "0" for j in range(length))


@dataclass(frozen=True)
class BitVector:
    """長さ n の二元ベクトル"""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise OutOfDomain("length", self.length, "length >= 1")
        if self.bits < 0 or self.bits >> self.length:
            raise OutOfDomain("bits", self.bits, f"[0, 2^{self.length})")

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """'0110' 形式から生成"""
        text = text.strip()
        return cls(len(text), _bits_from_string(text))

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        """台 (1 の位置) から生成"""
        bits = 0
        for j in support:
            bits |= 1 << j
        return cls(length, bits)

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @property
    def weight(self) -> int:
        """ハミング重み"""
        return self.bits.bit_count()

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.length) if (self.bits >> j) & 1)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return _bits_to_string(self.bits, self.length)


@dataclass(frozen=True)
class BitMatrix:
    """m x n 二元パリティ検査行列 (行ごとに int へ詰める)"""

    m: int
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise OutOfDomain("n", self.n, "n >= 1")
        if self.m < 0:
            raise OutOfDomain("m", self.m, "m >= 0")
        if len(self.rows) != self.m:
            raise LengthMismatch(self.m, len(self.rows), what="行数")
        for row in self.rows:
            if row < 0 or row >> self.n:
                raise OutOfDomain("row", row, f"[0, 2^{self.n})")

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "BitMatrix":
        return cls(len(rows), n, tuple(rows))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        """['110', '011'] 形式から生成"""
        lines = [line.strip() for line in lines]
        if not lines:
            raise MatrixFormatError("行が1つもありません (列数を決められません)")
        n = len(lines[0])
        for i, line in enumerate(lines):
            if len(line) != n:
                raise MatrixFormatError(
                    f"{i + 1}行目の長さ {len(line)} が列数 {n} と異なります", i + 1
                )
        return cls(len(lines), n, tuple(_bits_from_string(line) for line in lines))

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        """テキスト形式 (1行目 "m n"、続く m 行が n 文字の 0/1) を解析"""
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines:
            raise MatrixFormatError("空の入力です")
        header = lines[0].split()
        if len(header) != 2:
            raise MatrixFormatError("1行目は 'm n' である必要があります", 1)
        try:
            m, n = int(header[0]), int(header[1])
        except ValueError:
            raise MatrixFormatError("1行目の m, n が整数ではありません", 1)
        body = lines[1:]
        if len(body) != m:
            raise MatrixFormatError(f"行数 {len(body)} がヘッダの m={m} と異なります")
        rows: List[int] = []
        for i, line in enumerate(body):
            if len(line) != n:
                raise MatrixFormatError(
                    f"行の長さ {len(line)} がヘッダの n={n} と異なります", i + 2
                )
            rows.append(_bits_from_string(line))
        return cls(m, n, tuple(rows))

    @classmethod
    def from_index(cls, index: int, n: int, m: int) -> "BitMatrix":
        """行列番号から生成 (行優先・LSB先頭: index の bit i*n+j = H[i][j])"""
        mask = (1 << n) - 1
        return cls(m, n, tuple((index >> (i * n)) & mask for i in range(m)))

    @classmethod
    def zeros(cls, m: int, n: int) -> "BitMatrix":
        return cls(m, n, (0,) * m)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def to_text(self) -> str:
        lines = [f"{self.m} {self.n}"]
        lines.extend(_bits_to_string(row, self.n) for row in self.rows)
        return "\n".join(lines) + "\n"

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.n, self.rows[i])

    def column(self, j: int) -> int:
        """列 j を m ビットの int として返す (bit i = H[i][j])"""
        col = 0
        for i, row in enumerate(self.rows):
            col |= ((row >> j) & 1) << i
        return col

    def columns(self) -> Tuple[int, ...]:
        return tuple(self.column(j) for j in range(self.n))

    def __iter__(self) -> Iterator[BitVector]:
        return (BitVector(self.n, row) for row in self.rows)


@dataclass(frozen=True)
class WeightDistribution:
    """符号 C(H) の重み分布 A_0..A_n (厳密な整数)"""

    n: int
    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise LengthMismatch(self.n + 1, len(self.counts), what="重み分布の長さ")
        if any(c < 0 for c in self.counts):
            raise OutOfDomain("counts", self.counts, "非負整数")
        if self.counts[0] != 1:
            raise OutOfDomain("counts[0]", self.counts[0], "A_0 = 1")

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        """符号語数 M(H) = 2^{n - rank(H)}"""
        return sum(self.counts)

    @property
    def nonzero_total(self) -> int:
        """非零符号語数 M(H) - 1"""
        return self.total - 1

    @property
    def dimension(self) -> int:
        return self.total.bit_length() - 1

    @property
    def minimum_distance(self) -> int:
        """最小距離 (非零符号語がなければ 0)"""
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        return 0
