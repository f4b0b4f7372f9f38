"""Error handling unit tests"""
