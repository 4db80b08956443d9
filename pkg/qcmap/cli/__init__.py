"""qcmap CLI"""
