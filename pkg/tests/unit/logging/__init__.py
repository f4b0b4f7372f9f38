# ログ機能テストパッケージ
