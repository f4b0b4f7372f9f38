"""CLIバリデーション機能"""

from pathlib import Path
from typing import Iterable, List, Optional

import click


class ValidationError(click.BadParameter):
    """バリデーションエラー"""

    pass


def validate_verbosity(quiet: bool, verbose: int) -> None:
    """quiet と verbose の競合チェック"""
    if quiet and verbose:
        raise ValidationError("--quietと--verboseは同時に指定できません")


def parse_float_list(text: Optional[str], option: str) -> List[float]:
    """カンマ区切りの実数リスト ("0.1,0.5" など)

    Raises:
        ValidationError: 数値に変換できない要素がある場合
    """
    if not text:
        return []
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(float(token))
        except ValueError:
            raise ValidationError(f"{option} に数値でない値があります: {token!r}")
    return values


def parse_int_list(values: Iterable[str], option: str) -> List[int]:
    """複数指定・カンマ区切り・範囲 (10-24:2) を受け付ける整数リスト"""
    result: List[int] = []
    for value in values:
        for token in str(value).split(","):
            token = token.strip()
            if not token:
                continue
            try:
                if "-" in token[1:]:
                    span, _, step = token.partition(":")
                    low, _, high = span.partition("-")
                    result.extend(range(int(low), int(high) + 1, int(step or 1)))
                else:
                    result.append(int(token))
            except ValueError:
                raise ValidationError(f"{option} の形式が不正です: {token!r}")
    return result


def validate_output_path(output_path: Optional[Path]) -> None:
    """出力パスのバリデーション

    Args:
        output_path: 出力ファイルパス (None は標準出力)

    Raises:
        ValidationError: バリデーションエラー
    """
    if output_path is None:
        return
    if output_path.exists() and output_path.is_dir():
        raise ValidationError(f"出力先がディレクトリです: {output_path}")
    parent = output_path.parent
    if parent.exists() and not parent.is_dir():
        raise ValidationError(f"出力先の親がディレクトリではありません: {parent}")
