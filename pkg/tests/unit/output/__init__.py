# CSV出力機能のテストパッケージ
