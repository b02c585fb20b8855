# Tests for signedtools package
