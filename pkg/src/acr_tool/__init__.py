"""ランダム線形符号アンサンブルの重み分布統計・漸近集中率計算ツール"""

__version__ = "0.1.0"
__author__ = "ACR Tool Development Team"
__description__ = "ランダム線形符号アンサンブルの重み分布の二次統計と漸近集中率(ACR)の計算ツール"
