package com.minimart.payments;

import java.util.Map;

import org.springframework.web.bind.annotation.PathVariable;
import org.springframework.web.bind.annotation.PostMapping;
import org.springframework.web.bind.annotation.RequestBody;
import org.springframework.web.bind.annotation.RequestMapping;
import org.springframework.web.bind.annotation.RequestMethod;
import org.springframework.web.bind.annotation.RestController;

@RestController
@RequestMapping("/api/v1/payments")
public class PaymentController {

    @PostMapping("/charge")
    public PaymentRecord charge(@RequestBody Map<String, Object> body) {
        return new PaymentRecord();
    }

    @RequestMapping(value = "/refund/{paymentId}", method = RequestMethod.DELETE)
    public void refund(@PathVariable Integer paymentId) {
    }
}
