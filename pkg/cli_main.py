#!/usr/bin/env python3
"""
ACR Tool CLI スタンドアロンエントリーポイント

パッケージを未インストールのまま src/ から起動する
"""

if __name__ == "__main__":
    try:
        from acr_tool.cli.main import main

        main()
    except ImportError:
        import sys

        print("ERROR: acr_tool package not found", file=sys.stderr)
        print("Please ensure the package is properly installed.", file=sys.stderr)
        sys.exit(1)
